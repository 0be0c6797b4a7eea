#ifndef CURVEARITH_POLY_HPP
#define CURVEARITH_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvearith/field.hpp"

namespace curvearith {

// Dense univariate polynomial over a Field, ascending coefficients.
// The zero polynomial has an empty coefficient list; degree() returns
// kNegInf for it, the "minus infinity" marker.
class Poly {
public:
    static constexpr int kNegInf = -1;

    Poly() : field_(nullptr) {}
    explicit Poly(const Field* field) : field_(field) {}
    Poly(const Field* field, std::vector<FieldElement> coeffs);

    static Poly zero(const Field& f) { return Poly(&f); }
    static Poly one(const Field& f);
    static Poly x(const Field& f);
    static Poly constant(FieldElement c);
    static Poly from_ints(const Field& f, const std::vector<std::int64_t>& cs);

    const Field& field() const { return *field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(int i) const;                 // zero beyond the degree
    FieldElement leading() const;
    bool is_monic() const;
    bool is_constant() const { return c_.size() <= 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& a) const;
    Poly shifted(int n) const;                       // multiply by x^n
    std::string str(const char* var = "x") const;

    // Degree-then-ascending-coefficient-index order; total and deterministic.
    static int compare(const Poly& a, const Poly& b);

private:
    const Field* field_;
    std::vector<FieldElement> c_;
    void trim();
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);                       // monic
// g = gcd(a,b) monic together with u,v such that u*a + v*b = g.
struct XgcdResult { Poly g, u, v; };
XgcdResult xgcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, std::int64_t e, const Poly& m);
// base^(q^iter) mod m by iterated q-powering; avoids big exponents.
Poly frobenius_pow_mod(const Poly& base, std::int64_t q, int iter, const Poly& m);
Poly inv_mod(const Poly& a, const Poly& m);

} // namespace curvearith

#endif
