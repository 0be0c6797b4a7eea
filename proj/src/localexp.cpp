#include "curvearith/localexp.hpp"

#include <algorithm>

#include "curvearith/errors.hpp"

namespace curvearith {

// Representation note: stored coefficients cover exponents
// [lead, lead + c.size()); exponents from there up to prec are exact zeros.
// prec == kInfPrec marks an exact series (parameter, constants, monomials).

namespace {

constexpr int kInfPrec = 1 << 28;

int sat_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s >= kInfPrec) return kInfPrec;
    if (s <= -kInfPrec) return -kInfPrec;
    return static_cast<int>(s);
}

// Internal retry signal: a series computation ran out of known coefficients.
struct PrecisionShortfall {};

Series stripped(const Series& a) {
    Series r = a;
    size_t i = 0;
    while (i < r.c.size() && r.rf->is_zero(r.c[i])) ++i;
    if (i == r.c.size()) {
        r.c.clear();
        r.lead = r.prec;
    } else if (i > 0) {
        r.c.erase(r.c.begin(), r.c.begin() + i);
        r.lead += static_cast<int>(i);
    }
    return r;
}

}  // namespace

Series Series::zero_to(const ResidueField& rf, int prec) {
    Series s;
    s.rf = &rf;
    s.lead = prec;
    s.prec = prec;
    return s;
}

Series Series::constant(const ResidueField& rf, RFElem v, int prec) {
    if (rf.is_zero(v)) return zero_to(rf, prec);
    Series s;
    s.rf = &rf;
    s.lead = 0;
    s.prec = prec;
    s.c.push_back(std::move(v));
    return s;
}

Series Series::param(const ResidueField& rf, int prec) {
    if (prec <= 1) return zero_to(rf, prec);
    Series s;
    s.rf = &rf;
    s.lead = 1;
    s.prec = prec;
    s.c.push_back(rf.one());
    return s;
}

RFElem Series::coeff(int exp) const {
    if (exp >= prec) throw InternalError("series coefficient beyond known precision");
    if (exp < lead || exp >= lead + static_cast<int>(c.size())) return rf->zero();
    return c[exp - lead];
}

std::optional<int> Series::valuation() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (!rf->is_zero(c[i])) return lead + static_cast<int>(i);
    return std::nullopt;
}

Series Series::truncated(int new_prec) const {
    Series r = *this;
    if (new_prec >= prec) return r;
    r.prec = new_prec;
    if (new_prec <= lead) {
        r.lead = new_prec;
        r.c.clear();
    } else if (static_cast<int>(r.c.size()) > new_prec - r.lead) {
        r.c.resize(new_prec - r.lead);
    }
    return r;
}

Series Series::shifted(int n) const {
    Series r = *this;
    r.lead = sat_add(r.lead, n);
    r.prec = sat_add(r.prec, n);
    return r;
}

Series s_add(const Series& a, const Series& b) {
    const ResidueField& rf = *a.rf;
    Series r;
    r.rf = &rf;
    r.prec = std::min(a.prec, b.prec);
    int ea = a.lead + static_cast<int>(a.c.size());
    int eb = b.lead + static_cast<int>(b.c.size());
    int lead = std::min({a.lead, b.lead, r.prec});
    int ext = std::min(std::max(ea, eb), r.prec);
    r.lead = lead;
    if (ext > lead) {
        r.c.assign(ext - lead, rf.zero());
        for (int e = lead; e < ext; ++e) r.c[e - lead] = rf.add(a.coeff(e), b.coeff(e));
    } else {
        r.lead = r.prec;
    }
    return r;
}

Series s_neg(const Series& a) {
    Series r = a;
    for (auto& v : r.c) v = a.rf->neg(v);
    return r;
}

Series s_sub(const Series& a, const Series& b) { return s_add(a, s_neg(b)); }

Series s_mul(const Series& a, const Series& b) {
    const ResidueField& rf = *a.rf;
    Series r;
    r.rf = &rf;
    r.prec = std::min(sat_add(a.prec, b.lead), sat_add(b.prec, a.lead));
    if (a.c.empty() || b.c.empty()) {
        r.lead = r.prec;
        return r;
    }
    r.lead = sat_add(a.lead, b.lead);
    if (r.prec <= r.lead) {
        r.lead = r.prec;
        return r;
    }
    int ext = std::min(static_cast<long long>(r.lead) + static_cast<long long>(a.c.size()) +
                           static_cast<long long>(b.c.size()) - 1,
                       static_cast<long long>(r.prec));
    r.c.assign(ext - r.lead, rf.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (rf.is_zero(a.c[i])) continue;
        int ea = a.lead + static_cast<int>(i);
        for (size_t j = 0; j < b.c.size(); ++j) {
            int e = ea + b.lead + static_cast<int>(j);
            if (e >= ext) break;
            r.c[e - r.lead] = rf.add(r.c[e - r.lead], rf.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

Series s_mul_scalar(const Series& a, const RFElem& s) {
    if (a.rf->is_zero(s)) return Series::zero_to(*a.rf, a.prec);
    Series r = a;
    for (auto& v : r.c) v = a.rf->mul(v, s);
    return r;
}

Series s_inv(const Series& a0) {
    const ResidueField& rf = *a0.rf;
    Series a = stripped(a0);
    if (a.c.empty()) throw PrecisionShortfall{};
    int v = a.lead;
    if (a.prec >= kInfPrec) {
        if (a.c.size() == 1) {
            Series r;
            r.rf = &rf;
            r.lead = -v;
            r.prec = kInfPrec;
            r.c.push_back(rf.inv(a.c[0]));
            return r;
        }
        throw InternalError("inverse of an exact multi-term series needs a truncation");
    }
    int m = a.prec - v;
    std::vector<RFElem> w(m, rf.zero());
    RFElem c0inv = rf.inv(a.c[0]);
    w[0] = c0inv;
    for (int k = 1; k < m; ++k) {
        RFElem s = rf.zero();
        for (int i = 1; i <= k && i < static_cast<int>(a.c.size()) + 0; ++i) {
            const RFElem& ai = i < static_cast<int>(a.c.size()) ? a.c[i] : rf.zero();
            if (rf.is_zero(ai)) continue;
            s = rf.add(s, rf.mul(ai, w[k - i]));
        }
        w[k] = rf.neg(rf.mul(c0inv, s));
    }
    Series r;
    r.rf = &rf;
    r.lead = -v;
    r.prec = sat_add(a.prec, -2 * v);
    r.c = std::move(w);
    return r;
}

Series s_div(const Series& a, const Series& b) { return s_mul(a, s_inv(b)); }

Series s_pow(const Series& a, int e) {
    const ResidueField& rf = *a.rf;
    if (e == 0) return Series::constant(rf, rf.one(), kInfPrec);
    Series base = e < 0 ? s_inv(a) : a;
    int n = e < 0 ? -e : e;
    Series r = base;
    for (int i = 1; i < n; ++i) r = s_mul(r, base);
    return r;
}

Series s_eval_poly(const Poly& p, const Series& at) {
    const ResidueField& rf = *at.rf;
    Series r = Series::zero_to(rf, kInfPrec);
    for (int i = p.degree(); i >= 0; --i)
        r = s_add(s_mul(r, at), Series::constant(rf, rf.from_base(p.coeff(i)), kInfPrec));
    if (p.degree() < 0) r = Series::zero_to(rf, kInfPrec);
    return r;
}

Series s_compose(const Series& a, const Series& b) {
    const ResidueField& rf = *a.rf;
    Series r = Series::zero_to(rf, kInfPrec);
    if (a.c.empty()) return Series::zero_to(rf, a.prec);
    Series bp = s_pow(b, a.lead);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!rf.is_zero(a.c[i])) r = s_add(r, s_mul_scalar(bp, a.c[i]));
        if (i + 1 < a.c.size()) bp = s_mul(bp, b);
    }
    return r.truncated(std::min(r.prec, a.prec));
}

Series s_reverse(const Series& a0) {
    const ResidueField& rf = *a0.rf;
    Series a = stripped(a0);
    if (a.lead != 1 || a.c.empty() || rf.is_zero(a.c[0]))
        throw InternalError("series reversion needs valuation exactly 1");
    int R = a.prec - 1;  // known coefficients s_1..s_R
    RFElem s1inv = rf.inv(a.c[0]);
    Series T;
    T.rf = &rf;
    T.lead = 1;
    T.prec = R + 1;
    T.c.assign(R, rf.zero());
    T.c[0] = s1inv;
    for (int n = 2; n <= R; ++n) {
        Series comp = s_compose(a.truncated(n + 1), T.truncated(n + 1));
        RFElem d = comp.coeff(n);
        if (!rf.is_zero(d)) T.c[n - 1] = rf.sub(T.c[n - 1], rf.mul(d, s1inv));
    }
    return T;
}

// ---------------------------------------------------------------------------
// Branch parametrization

namespace {

Series padded(const Series& s, int prec) {
    Series r = s;
    if (prec > r.prec) r.prec = prec;
    if (r.lead > r.prec) r.lead = r.prec;
    return r;
}

// Root Y(t) of sum_k coeffs[k](t) Y^k with Y(0) = y0 a simple root.
Series newton_univariate(const std::vector<Series>& coeffs, const ResidueField& rf,
                         const RFElem& y0, int target) {
    auto eval = [&](const Series& y, const std::vector<Series>& cs, int prec) {
        Series r = Series::zero_to(rf, kInfPrec);
        for (size_t k = cs.size(); k-- > 0;) r = s_add(s_mul(r, y), cs[k]);
        return r.truncated(prec);
    };
    std::vector<Series> dcoeffs;
    for (size_t k = 1; k < coeffs.size(); ++k) {
        RFElem kk = rf.from_base(rf.base().from_int(static_cast<std::int64_t>(k)));
        dcoeffs.push_back(s_mul_scalar(coeffs[k], kk));
    }
    Series y = Series::constant(rf, y0, 1);
    int prec = 1;
    while (prec < target) {
        prec = std::min(2 * prec, target);
        Series ylift = padded(y, prec);
        Series g = eval(ylift, coeffs, prec);
        Series dg = eval(ylift, dcoeffs, prec);
        y = s_sub(ylift, s_div(g, dg)).truncated(prec);
    }
    return y;
}

std::vector<Series> poly_coeff_series(const std::vector<Poly>& phi, const Series& at) {
    std::vector<Series> out;
    out.reserve(phi.size());
    for (const auto& p : phi) out.push_back(s_eval_poly(p, at));
    return out;
}

}  // namespace

void LocalCtx::ensure(const Place& place, int want) {
    if (prec >= want) return;
    want = std::max(want, 8);
    const CurveModel& X = place.curve();
    const ResidueField& rf = place.residue_field();
    Series t = Series::param(rf, kInfPrec);

    switch (place.kind()) {
        case Place::Kind::FiniteSplit:
        case Place::Kind::FiniteInert: {
            // x(t): pi(x) = t, Hensel from xbar; y(t): Phi(x(t), Y) = 0 from ybar.
            std::vector<Series> pc;
            const Poly& pi = place.base_point();
            for (int i = 0; i <= pi.degree(); ++i)
                pc.push_back(Series::constant(rf, rf.from_base(pi.coeff(i)), kInfPrec));
            pc[0] = s_sub(pc[0], t);
            int xprec = want + 2;
            xs = newton_univariate(pc, rf, rf.xbar(), xprec);
            RFElem y0 = place.kind() == Place::Kind::FiniteSplit
                            ? rf.from_poly(place.y_datum())
                            : rf.ybar();
            ys = newton_univariate(poly_coeff_series(X.y_charpoly(), xs), rf, y0, want);
            break;
        }
        case Place::Kind::FiniteRamified: {
            // y(t) = ybar + t exactly; x(t) solves Phi(X, y(t)) = 0 from xbar.
            RFElem ybar = rf.from_poly(place.y_datum());
            ys = s_add(Series::constant(rf, ybar, kInfPrec), t);
            const auto& phi = X.y_charpoly();
            int xdeg = 0;
            for (auto& p : phi) xdeg = std::max(xdeg, p.degree());
            std::vector<Series> cs(xdeg + 1, Series::zero_to(rf, kInfPrec));
            Series ypow = Series::constant(rf, rf.one(), kInfPrec);
            for (size_t j = 0; j < phi.size(); ++j) {
                for (int i = 0; i <= phi[j].degree(); ++i) {
                    if (phi[j].coeff(i).is_zero()) continue;
                    cs[i] = s_add(cs[i], s_mul_scalar(ypow, rf.from_base(phi[j].coeff(i))));
                }
                if (j + 1 < phi.size()) ypow = s_mul(ypow, ys);
            }
            int wprec = want + 2;
            for (auto& s : cs) s = s.truncated(wprec);
            xs = newton_univariate(cs, rf, rf.xbar(), wprec);
            break;
        }
        case Place::Kind::HyperInfinity: {
            // xi = 1/x satisfies xi (1 + Ht(xi) t) = t^2 Ft(xi) with Ft, Ht the
            // reversed coefficient lists of f and h; then x = 1/xi, y = x^g/t.
            int g = X.genus();
            const Poly& f = X.f();
            const Poly& h = X.h();
            int fdeg = f.degree();  // 2g+1
            auto cst = [&](const FieldElement& e) {
                return Series::constant(rf, rf.from_base(e), kInfPrec);
            };
            Series t2 = s_mul(t, t);
            std::vector<Series> cs(fdeg + 1, Series::zero_to(rf, kInfPrec));
            for (int k = 0; k <= fdeg; ++k) {
                Series v = Series::zero_to(rf, kInfPrec);
                if (k == 1) v = s_add(v, Series::constant(rf, rf.one(), kInfPrec));
                if (k >= 1 && g - (k - 1) >= 0) v = s_add(v, s_mul(t, cst(h.coeff(g - (k - 1)))));
                v = s_sub(v, s_mul(t2, cst(f.coeff(fdeg - k))));
                cs[k] = v;
            }
            int xiprec = want + 2 * g + 6;
            for (auto& s : cs) s = s.truncated(xiprec);
            Series xi = newton_univariate(cs, rf, rf.zero(), xiprec);
            xs = s_inv(xi);
            ys = s_div(s_pow(xs, g), t);
            break;
        }
        case Place::Kind::PlaneAffine:
        case Place::Kind::PlaneAtInfinity: {
            int chart = place.chart();
            std::vector<Poly> A = X.chart_equation(chart);
            RFElem a0 = rf.from_realization(place.rep_first());
            RFElem b0 = rf.from_realization(place.rep_second());
            const Field& E = *place.point_field();
            // d/d(second coordinate) at the representative decides which
            // coordinate serves as the branch parameter.
            FieldElement da = E.zero();
            {
                FieldElement s1v = place.rep_first(), s2v = place.rep_second();
                FieldElement pw = E.one();
                for (size_t j = 1; j < A.size(); ++j) {
                    FieldElement aj = E.zero();
                    for (int i = A[j].degree(); i >= 0; --i)
                        aj = aj * s1v + E.from_int(A[j].coeff(i).index());
                    da = da + E.from_int(static_cast<std::int64_t>(j)) * aj * pw;
                    if (j + 1 < A.size()) pw = pw * s2v;
                }
            }
            int d = X.plane_degree();
            int wprec = want + 4 * d + 8;
            Series s1, s2;
            if (!da.is_zero()) {
                s1 = padded(s_add(Series::constant(rf, a0, kInfPrec), t).truncated(wprec), wprec);
                s2 = newton_univariate(poly_coeff_series(A, s1), rf, b0, wprec);
            } else {
                s2 = padded(s_add(Series::constant(rf, b0, kInfPrec), t).truncated(wprec), wprec);
                int sdeg = 0;
                for (auto& p : A) sdeg = std::max(sdeg, p.degree());
                std::vector<Series> cs(sdeg + 1, Series::zero_to(rf, kInfPrec));
                Series pw = Series::constant(rf, rf.one(), kInfPrec);
                for (size_t j = 0; j < A.size(); ++j) {
                    for (int i = 0; i <= A[j].degree(); ++i)
                        if (!A[j].coeff(i).is_zero())
                            cs[i] = s_add(cs[i], s_mul_scalar(pw, rf.from_base(A[j].coeff(i))));
                    if (j + 1 < A.size()) pw = s_mul(pw, s2);
                }
                for (auto& s : cs) s = s.truncated(wprec);
                s1 = newton_univariate(cs, rf, a0, wprec);
            }
            if (chart == 2) {
                xs = s1;
                ys = s2;
            } else if (chart == 1) {
                // (u, w) = (X/Y, Z/Y): x = u/w, y = 1/w
                xs = s_div(s1, s2);
                ys = s_inv(s2);
            } else {
                // (s, w) = (Y/X, Z/X): x = 1/w, y = s/w
                xs = s_inv(s2);
                ys = s_div(s1, s2);
            }
            break;
        }
    }
    prec = std::min(xs.prec, ys.prec);
    uniformizer_series.reset();
    uniformizer_inverse.reset();
}

namespace {

Series substitute(const FunctionElement& f, const Series& xs, const Series& ys) {
    const ResidueField& rf = *xs.rf;
    Series num = Series::zero_to(rf, kInfPrec);
    const auto& n = f.num();
    for (size_t j = n.size(); j-- > 0;) num = s_add(s_mul(num, ys), s_eval_poly(n[j], xs));
    Series den = s_eval_poly(f.den(), xs);
    return s_div(num, den);
}

// Certified upper bound on v_x(f); past this an all-zero window would mean
// the function itself is zero.
int valuation_cap(const FunctionElement& f, const Place& x, int vx, int vy) {
    const CurveModel& X = f.curve();
    int dx = 0, dy = static_cast<int>(f.num().size());
    for (auto& p : f.num()) dx = std::max(dx, p.degree());
    dx = std::max(dx, f.den().degree());
    int geom = X.family() == CurveFamily::Plane ? X.plane_degree() * X.plane_degree()
                                                : 2 * X.genus() + 2;
    int coord = std::abs(vx) + std::abs(vy) + geom + 2;
    return (dx + dy + 2) * coord * std::max(1, x.degree()) + 16;
}

Series expand_locked(LocalCtx& L, const Place& x, const FunctionElement& f, int terms) {
    L.ensure(x, 8);
    int vx = L.xs.valuation().value_or(L.xs.lead);
    int vy = L.ys.valuation().value_or(L.ys.lead);
    int cap = valuation_cap(f, x, vx, vy);
    int dy = std::max(0, f.y_deg());
    int dxn = f.den().degree();
    for (auto& p : f.num()) dxn = std::max(dxn, p.degree());
    int shift = dxn * std::max(0, -vx) + dy * std::max(0, -vy);
    int want = terms + shift + 8;
    while (true) {
        L.ensure(x, want);
        try {
            Series s = substitute(f, L.xs, L.ys);
            auto v = s.valuation();
            if (v && s.prec - *v >= terms) return stripped(s);
            if (!v && s.prec > cap)
                throw InternalError("series of a nonzero function vanished past its bound");
        } catch (const PrecisionShortfall&) {
        }
        if (want > 64 * (cap + terms) + 4096) throw InternalError("expansion precision runaway");
        want *= 2;
    }
}

}  // namespace

Series expand_in_param(const Place& x, const FunctionElement& f, int terms) {
    if (f.is_zero()) throw InvalidInputError("cannot expand the zero function");
    LocalCtx& L = x.local();
    std::lock_guard<std::mutex> lock(L.mu);
    return expand_locked(L, x, f, terms);
}

int valuation_at(const FunctionElement& f, const Place& x) {
    if (f.is_zero()) throw InvalidInputError("the zero function has no valuation");
    return expand_in_param(x, f, 1).lead;
}

RFElem evaluate_at(const FunctionElement& f, const Place& x) {
    const ResidueField& rf = x.residue_field();
    if (f.is_zero()) return rf.zero();
    Series s = expand_in_param(x, f, 1);
    if (s.lead < 0) throw PoleError("function has a pole at the evaluation place");
    if (s.lead > 0) return rf.zero();
    return s.c[0];
}

OracleExpansion oracle_expand(const Place& x, const FunctionElement& f, int terms) {
    if (f.is_zero()) throw InvalidInputError("cannot expand the zero function");
    const ResidueField& rf = x.residue_field();
    LocalCtx& L = x.local();
    std::lock_guard<std::mutex> lock(L.mu);
    int extra = 4;
    while (true) {
        try {
            Series s = expand_locked(L, x, f, terms + extra);
            L.ensure(x, std::max(L.prec, std::abs(s.lead) + terms + extra + 4));
            Series q = substitute(x.uniformizer(), L.xs, L.ys);
            auto vq = q.valuation();
            if (!vq || *vq != 1) throw InternalError("uniformizer series does not have valuation 1");
            std::vector<Series> us;
            us.reserve(x.residue_lifts().size());
            for (const auto& u : x.residue_lifts()) us.push_back(substitute(u, L.xs, L.ys));
            OracleExpansion out;
            out.lead = s.lead;
            Series T = s_mul(s, s_pow(q, -s.lead));
            Series qinv = s_inv(q);
            for (int j = 0; j < terms; ++j) {
                if (T.prec < 1) throw PrecisionShortfall{};
                RFElem r = T.coeff(0);
                auto coords = rf.phi(r);
                out.alpha.push_back(coords);
                if (j + 1 == terms) break;
                Series g = Series::zero_to(rf, kInfPrec);
                for (int l = 0; l < rf.degree(); ++l) {
                    if (coords[l].is_zero()) continue;
                    g = s_add(g, s_mul_scalar(us[l], rf.from_base(coords[l])));
                }
                T = s_mul(s_sub(T, g), qinv);
            }
            return out;
        } catch (const PrecisionShortfall&) {
            extra *= 2;
            if (extra > 1 << 14) throw InternalError("oracle expansion precision runaway");
        }
    }
}

} // namespace curvearith
