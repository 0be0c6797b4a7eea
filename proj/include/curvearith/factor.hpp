#ifndef CURVEARITH_FACTOR_HPP
#define CURVEARITH_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "curvearith/poly.hpp"

namespace curvearith {

struct PolyFactor {
    Poly factor;   // monic irreducible
    int multiplicity;
};

// Full factorization over F_q: squarefree split, then distinct-degree, then
// equal-degree splitting with a seeded generator, so results are reproducible.
// Factors come back sorted (degree, then coefficients ascending).
std::vector<PolyFactor> factor_poly(const Poly& p, std::uint64_t seed = 0x5eedull);

bool is_irreducible(const Poly& p);

// Roots of p in its coefficient field, each listed once, sorted by element index.
std::vector<FieldElement> poly_roots(const Poly& p, std::uint64_t seed = 0x5eedull);

// All monic irreducibles of degree <= m over the field, sorted
// degree-then-coefficient-order.
std::vector<Poly> irreducibles_up_to(const Field& field, int m);

} // namespace curvearith

#endif
