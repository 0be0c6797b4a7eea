#include "curvearith/factor.hpp"

#include <algorithm>
#include <random>

#include "curvearith/errors.hpp"

namespace curvearith {

namespace {

Poly random_poly_below(const Field& F, int deg_bound, std::mt19937_64& rng) {
    std::vector<FieldElement> c;
    c.reserve(deg_bound);
    for (int i = 0; i < deg_bound; ++i)
        c.push_back(F.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(F.size()))));
    return Poly(&F, std::move(c));
}

// f with f' == 0 is a p-th power g(x^p); extract g.
Poly pth_root_poly(const Poly& f) {
    const Field& F = f.field();
    const auto p = static_cast<int>(F.characteristic());
    std::vector<FieldElement> g;
    for (int i = 0; i <= f.degree(); i += p) g.push_back(F.pth_root(f.coeff(i)));
    return Poly(&F, std::move(g));
}

// Squarefree decomposition (Yun's algorithm with p-th power recursion).
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& fin) {
    const Field& F = fin.field();
    const auto p = static_cast<int>(F.characteristic());
    std::vector<std::pair<Poly, int>> out;
    Poly f = fin.monic();
    if (f.degree() < 1) return out;
    Poly df = f.derivative();
    if (df.is_zero()) {
        for (auto& [g, e] : squarefree_decompose(pth_root_poly(f))) out.emplace_back(g, e * p);
        return out;
    }
    Poly c = gcd(f, df);
    Poly w = divmod(f, c).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        c = divmod(c, y).first;
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decompose(pth_root_poly(c))) out.emplace_back(g, e * p);
    }
    return out;
}

// Distinct-degree factorization of a squarefree monic f:
// returns (product of irreducibles of degree d, d) pairs.
std::vector<std::pair<Poly, int>> ddf(const Poly& fin) {
    const Field& F = fin.field();
    std::vector<std::pair<Poly, int>> out;
    Poly f = fin;
    Poly h = mod(Poly::x(F), f);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = pow_mod(h, F.size(), f);
        Poly g = gcd(h - Poly::x(F), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            h = mod(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); f is a squarefree monic product
// of irreducibles all of degree d.
void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Field& F = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    Poly splitter(&F);
    while (true) {
        Poly a = random_poly_below(F, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly g0 = gcd(a, f);
        if (g0.degree() > 0 && g0.degree() < f.degree()) {
            splitter = g0;
            break;
        }
        Poly b(&F);
        if (F.characteristic() == 2) {
            // trace map over F_{2^(k*d)}
            int bits = F.degree() * d;
            Poly t = mod(a, f), acc = t;
            for (int i = 1; i < bits; ++i) {
                t = pow_mod(t, 2, f);
                acc = acc + t;
            }
            b = acc;
        } else {
            // a^((q^d-1)/2) - 1 with the exponent factored as
            // (1 + q + ... + q^(d-1)) * (q-1)/2, so no exponent ever
            // exceeds machine range.
            Poly s = mod(a, f);
            Poly t = s;
            Poly aq = s;
            for (int i = 1; i < d; ++i) {
                aq = pow_mod(aq, F.size(), f);
                t = mod(t * aq, f);
            }
            // then raise to (q-1)/2; (q^d-1)/2 = (1+q+...+q^(d-1)) * (q-1)/2
            b = pow_mod(t, (F.size() - 1) / 2, f) - Poly::one(F);
        }
        Poly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    edf(splitter, d, rng, out);
    edf(divmod(f, splitter).first, d, rng, out);
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& p, std::uint64_t seed) {
    if (p.is_zero()) throw InvalidInputError("cannot factor the zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<PolyFactor> out;
    for (auto& [sf, mult] : squarefree_decompose(p)) {
        for (auto& [prod, d] : ddf(sf)) {
            std::vector<Poly> irr;
            edf(prod, d, rng, irr);
            for (auto& q : irr) out.push_back({q.monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return Poly::compare(a.factor, b.factor) < 0;
    });
    return out;
}

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    const Field& F = p.field();
    Poly f = p.monic();
    int n = f.degree();
    if (n == 1) return true;
    Poly x = Poly::x(F);
    Poly h = frobenius_pow_mod(x, F.size(), n, f);
    if (!(h - mod(x, f)).is_zero()) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime_int(l)) continue;
        Poly hl = frobenius_pow_mod(x, F.size(), n / l, f);
        if (gcd(hl - x, f).degree() != 0) return false;
    }
    return true;
}

std::vector<FieldElement> poly_roots(const Poly& p, std::uint64_t seed) {
    if (p.is_zero()) throw InvalidInputError("cannot extract roots of the zero polynomial");
    const Field& F = p.field();
    std::vector<FieldElement> roots;
    if (p.degree() < 1) return roots;
    // Restrict to the product of linear factors: gcd(p, x^q - x).
    Poly x = Poly::x(F);
    Poly f = p.monic();
    Poly xq = pow_mod(x, F.size(), f);
    Poly lin = gcd(xq - x, f);
    if (lin.degree() == 0) return roots;
    std::mt19937_64 rng(seed);
    std::vector<Poly> irr;
    edf(lin, 1, rng, irr);
    for (auto& l : irr) roots.push_back(-l.coeff(0));
    std::sort(roots.begin(), roots.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.index() < b.index(); });
    return roots;
}

std::vector<Poly> irreducibles_up_to(const Field& field, int m) {
    if (m < 1) throw InvalidInputError("degree bound must be positive");
    std::vector<Poly> out;
    for (int d = 1; d <= m; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) {
            count *= field.size();
            if (count > 20000000) throw ResourceError("too many candidate polynomials");
        }
        for (std::int64_t n = 0; n < count; ++n) {
            std::vector<FieldElement> c;
            c.reserve(d + 1);
            std::int64_t v = n;
            for (int i = 0; i < d; ++i) {
                c.push_back(field.element_at(v % field.size()));
                v /= field.size();
            }
            c.push_back(field.one());
            Poly cand(&field, std::move(c));
            if (is_irreducible(cand)) out.push_back(std::move(cand));
        }
    }
    return out;
}

} // namespace curvearith
