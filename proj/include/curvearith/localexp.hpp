#ifndef CURVEARITH_LOCALEXP_HPP
#define CURVEARITH_LOCALEXP_HPP

#include <mutex>
#include <optional>
#include <vector>

#include "curvearith/places.hpp"
#include "curvearith/residue_field.hpp"

namespace curvearith {

// Truncated Laurent series over a residue field; coefficient i belongs to
// exponent lead + i and all exponents < prec are determined.
struct Series {
    const ResidueField* rf = nullptr;
    int lead = 0;
    int prec = 0;
    std::vector<RFElem> c;

    static Series zero_to(const ResidueField& rf, int prec);
    static Series constant(const ResidueField& rf, RFElem v, int prec);
    static Series param(const ResidueField& rf, int prec);  // the series "t"

    int known_terms() const { return prec - lead; }
    RFElem coeff(int exp) const;
    // Exponent of the first nonzero known coefficient, if any.
    std::optional<int> valuation() const;
    Series truncated(int new_prec) const;
    Series shifted(int n) const;
};

Series s_add(const Series& a, const Series& b);
Series s_sub(const Series& a, const Series& b);
Series s_neg(const Series& a);
Series s_mul(const Series& a, const Series& b);
Series s_mul_scalar(const Series& a, const RFElem& s);
// Inverse; requires the valuation to resolve within the known window.
Series s_inv(const Series& a);
Series s_div(const Series& a, const Series& b);
Series s_pow(const Series& a, int e);
// Evaluate a base-field polynomial on a series (coefficients lifted into the
// residue field).
Series s_eval_poly(const Poly& p, const Series& at);
// Compositional inverse of a series with valuation exactly 1.
Series s_reverse(const Series& a);
// Substitute: a(b), where v(b) >= 1; a may be Laurent.
Series s_compose(const Series& a, const Series& b);

// Local analytic data of a place: the branch parametrization
// t -> (x(t), y(t)) with coefficients in the residue field, plus derived
// series, grown on demand.  Guarded by a mutex; a Place is logically
// immutable and safe to share.
struct LocalCtx {
    std::mutex mu;
    int prec = 0;
    Series xs, ys;            // coordinate series at precision `prec`
    std::optional<Series> uniformizer_series;   // at the ctx precision
    std::optional<Series> uniformizer_inverse;  // reversion target, cached
    std::optional<int> v_base;                  // v_x(pi) for finite places

    // Implemented in localexp.cpp:
    // (re)compute the parametrization so that both series have absolute
    // precision >= want.  Caller holds the lock.
    void ensure(const Place& place, int want);
};

// Expansion of f in the internal branch parameter, normalized so that c[0] is
// the leading (nonzero) coefficient; at least `terms` coefficients known.
Series expand_in_param(const Place& x, const FunctionElement& f, int terms);

// Coefficients of f with respect to the place's uniformizer and residue
// lifts u_l: f = sum_j (sum_l alpha[j][l] u_l) q^(lead+j).  Exactly the
// substitution-based route: parametrize, substitute, divide truncated series.
struct OracleExpansion {
    int lead;                                    // exponent of the first row
    std::vector<std::vector<FieldElement>> alpha;  // terms x deg(x) coordinates
};
OracleExpansion oracle_expand(const Place& x, const FunctionElement& f, int terms);

} // namespace curvearith

#endif
