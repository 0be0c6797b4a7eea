#ifndef CURVEARITH_FIELD_HPP
#define CURVEARITH_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace curvearith {

class Field;

// Element of F_{p^k}, stored as coordinates over F_p in the power basis of
// the field generator, ascending.  Elements keep a raw pointer to their field;
// fields are owned elsewhere (curve models, test fixtures) and outlive them.
class FieldElement {
public:
    FieldElement() : field_(nullptr) {}
    FieldElement(const Field* field, std::vector<std::int64_t> coords);

    const Field& field() const { return *field_; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Index in [0, q): sum c_i p^i.  Gives the deterministic element order.
    std::int64_t index() const;

    std::string str() const;

private:
    const Field* field_;
    std::vector<std::int64_t> c_;
    friend class Field;
};

// F_{p^k} with a monic irreducible modulus over F_p (no modulus for k = 1).
// When no modulus is supplied the lexicographically least irreducible is
// chosen, ordered by the integer encoding sum c_i p^i of the non-leading
// coefficients; this makes extension fields reproducible across runs.
class Field {
public:
    static std::shared_ptr<const Field> prime(std::int64_t p);
    static std::shared_ptr<const Field> extension(std::int64_t p, int k);
    // modulus: ascending coefficients of a monic irreducible of degree k.
    static std::shared_ptr<const Field> extension(std::int64_t p, int k,
                                                  std::vector<std::int64_t> modulus);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::int64_t size() const { return q_; }
    // Modulus coefficients (length k+1, monic); empty for prime fields.
    const std::vector<std::int64_t>& modulus() const { return mod_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t v) const;          // image of v mod p
    FieldElement from_coords(std::vector<std::int64_t> c) const;
    FieldElement element_at(std::int64_t index) const;    // inverse of FieldElement::index
    FieldElement generator() const;                       // root of the modulus (k > 1)

    // p-th-root (inverse Frobenius); bijective on a finite field.
    FieldElement pth_root(const FieldElement& a) const;

    bool same(const Field& o) const { return this == &o; }

private:
    Field(std::int64_t p, int k, std::vector<std::int64_t> modulus);

    std::int64_t p_;
    int k_;
    std::int64_t q_;
    std::vector<std::int64_t> mod_;     // monic, ascending, size k_+1; empty if k_==1
    std::vector<std::int64_t> red_;     // x^k reduced: -mod_ lower part, size k_

    std::vector<std::int64_t> mul_coords(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) const;
    std::vector<std::int64_t> inv_coords(const std::vector<std::int64_t>& a) const;

    friend class FieldElement;
};

// Largest supported field size; beyond this, element enumeration and the
// dense kernels stop being a desk-scale proposition.
inline constexpr std::int64_t kMaxFieldSize = 100000;

bool is_prime_int(std::int64_t n);

} // namespace curvearith

#endif
