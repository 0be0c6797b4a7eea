#ifndef CURVEARITH_RESIDUE_FIELD_HPP
#define CURVEARITH_RESIDUE_FIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "curvearith/matrix.hpp"
#include "curvearith/poly.hpp"

namespace curvearith {

// Residue field element.  Interpretation depends on the owning field's kind:
//   Simple:     a(T) mod pi, b unused (zero)
//   Pair:       a(T) + b(T)*ybar, both mod pi
//   PointField: a's coefficients are the coordinates of an element of the
//               realization field E = F_{p^e}, b unused
struct RFElem {
    Poly a, b;
};

// Data for the quadratic layer of an inert place: the curve coefficients
// reduced mod pi, so that ybar^2 + hbar*ybar = fbar.
struct InertQuadratic {
    Poly hbar, fbar;
};

// Residue field k(x) of a place, as an extension of the curve's base field
// F_q of degree deg(x), together with the distinguished ordered basis
// {u_1, ..., u_deg(x)} and the coordinate isomorphism phi onto F_q^deg(x).
class ResidueField {
public:
    enum class Kind { Simple, Pair, PointField };

    // Simple: F_q[T]/pi with the power basis of the class of T.
    // Pair (quad present): degree 2*deg(pi), basis = powers of T tensored
    // with {1, ybar}.
    ResidueField(std::shared_ptr<const Field> base, Poly pi,
                 std::optional<InertQuadratic> quad = std::nullopt);

    // PointField: F_{p^e} realized by E, basis = powers of theta (a generator
    // of E over the prime base field).
    ResidueField(std::shared_ptr<const Field> base, std::shared_ptr<const Field> realization,
                 FieldElement theta);

    Kind kind() const { return kind_; }
    int degree() const { return deg_; }
    const Field& base() const { return *base_; }
    const Poly& modulus() const { return pi_; }
    const Field& realization() const { return *E_; }
    const FieldElement& theta() const { return theta_; }

    RFElem zero() const;
    RFElem one() const;
    RFElem from_base(const FieldElement& c) const;
    RFElem from_poly(const Poly& a) const;           // Simple/Pair: a mod pi
    RFElem from_pair(const Poly& a, const Poly& b) const;  // Pair
    RFElem from_realization(const FieldElement& v) const;  // PointField
    RFElem xbar() const;                             // Simple/Pair: class of T
    RFElem ybar() const;                              // Pair only
    RFElem basis_element(int l) const;                // l-th basis vector, 0-based

    bool is_zero(const RFElem& x) const;
    bool eq(const RFElem& x, const RFElem& y) const;
    RFElem add(const RFElem& x, const RFElem& y) const;
    RFElem sub(const RFElem& x, const RFElem& y) const;
    RFElem neg(const RFElem& x) const;
    RFElem mul(const RFElem& x, const RFElem& y) const;
    RFElem mul_base(const RFElem& x, const FieldElement& c) const;
    RFElem inv(const RFElem& x) const;
    RFElem pow(const RFElem& x, std::int64_t e) const;

    // Coordinates with respect to the distinguished basis; phi is F_q-linear
    // and maps basis_element(l) to the l-th unit vector.
    std::vector<FieldElement> phi(const RFElem& x) const;
    RFElem from_phi(const std::vector<FieldElement>& coords) const;

    // Minimal polynomial of x over F_q (monic).
    Poly min_poly(const RFElem& x) const;

    // Deterministic total order key.
    std::vector<std::int64_t> order_key(const RFElem& x) const;

private:
    FieldElement to_E(const RFElem& x) const;

    Kind kind_;
    std::shared_ptr<const Field> base_;
    int deg_;
    Poly pi_;
    Poly hbar_, fbar_;
    std::shared_ptr<const Field> E_;
    FieldElement theta_;
    // PointField basis-change matrices between E-coordinates and theta-power
    // coordinates (columns of from_ are coords of theta^j).
    FieldMatrix from_coord_, to_coord_;
};

// Residue field of a finite place in the x-line presentation: pi irreducible
// over the base; the quadratic part is present exactly for inert places.
ResidueField make_residue_field(std::shared_ptr<const Field> base, const Poly& pi,
                                std::optional<InertQuadratic> quad = std::nullopt);

} // namespace curvearith

#endif
