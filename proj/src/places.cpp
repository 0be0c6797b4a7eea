#include "curvearith/places.hpp"

#include <algorithm>
#include <set>

#include "curvearith/errors.hpp"
#include "curvearith/factor.hpp"
#include "curvearith/localexp.hpp"

namespace curvearith {

Place::~Place() = default;

bool Place::over_infinity() const {
    return kind_ == Kind::HyperInfinity || kind_ == Kind::PlaneAtInfinity;
}

std::vector<std::int64_t> Place::order_key() const {
    std::vector<std::int64_t> k;
    k.push_back(degree_);
    k.push_back(over_infinity() ? 0 : 1);
    if (!over_infinity()) {
        k.push_back(base_.degree());
        for (int i = 0; i <= base_.degree(); ++i) k.push_back(base_.coeff(i).index());
    }
    k.push_back(static_cast<std::int64_t>(kind_));
    if (kind_ == Kind::FiniteSplit) {
        for (int i = 0; i < base_.degree(); ++i) k.push_back(ydatum_.coeff(i).index());
    } else if (kind_ == Kind::PlaneAffine || kind_ == Kind::PlaneAtInfinity) {
        k.push_back(chart_);
        k.push_back(rep_[0].index());
        k.push_back(rep_[1].index());
    }
    return k;
}

std::string Place::id() const {
    std::string s;
    for (auto v : order_key()) s += std::to_string(v) + ".";
    return s;
}

bool place_less(const PlacePtr& a, const PlacePtr& b) {
    return a->order_key() < b->order_key();
}

bool place_same(const Place& a, const Place& b) {
    return &a == &b || a.order_key() == b.order_key();
}

// ---------------------------------------------------------------------------

namespace {

RFElem rf_element_at(const ResidueField& rf, std::int64_t index) {
    std::vector<FieldElement> coords;
    coords.reserve(rf.degree());
    std::int64_t q = rf.base().size();
    for (int l = 0; l < rf.degree(); ++l) {
        coords.push_back(rf.base().element_at(index % q));
        index /= q;
    }
    return rf.from_phi(coords);
}

std::int64_t rf_size_checked(const ResidueField& rf) {
    std::int64_t s = 1;
    for (int i = 0; i < rf.degree(); ++i) {
        s *= rf.base().size();
        if (s > (std::int64_t(1) << 40))
            throw ResourceError("residue field too large for square-root search");
    }
    return s;
}

// Tonelli-Shanks in an odd-order residue field; returns a root of T^2 = a.
RFElem rf_sqrt(const ResidueField& rf, const RFElem& a) {
    if (rf.is_zero(a)) return a;
    std::int64_t Q = rf_size_checked(rf);
    if (Q % 4 == 3) return rf.pow(a, (Q + 1) / 4);
    std::int64_t m = Q - 1;
    int s = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }
    // deterministic non-residue scan
    RFElem z = rf.one();
    for (std::int64_t i = 1;; ++i) {
        if (i >= Q) throw InternalError("no quadratic non-residue found");
        z = rf_element_at(rf, i);
        if (rf.is_zero(z)) continue;
        if (!rf.eq(rf.pow(z, (Q - 1) / 2), rf.one())) break;
    }
    RFElem c = rf.pow(z, m);
    RFElem t = rf.pow(a, m);
    RFElem r = rf.pow(a, (m + 1) / 2);
    int e = s;
    while (!rf.eq(t, rf.one())) {
        RFElem tt = t;
        int i = 0;
        while (!rf.eq(tt, rf.one())) {
            tt = rf.mul(tt, tt);
            ++i;
            if (i == e) throw InternalError("square root of a non-residue requested");
        }
        RFElem b = c;
        for (int j = 0; j < e - i - 1; ++j) b = rf.mul(b, b);
        r = rf.mul(r, b);
        c = rf.mul(b, b);
        t = rf.mul(t, c);
        e = i;
    }
    return r;
}

std::vector<FieldElement> flatten_f2(const ResidueField& rf, const Field& f2, const RFElem& v) {
    std::vector<FieldElement> out;
    for (const auto& comp : rf.phi(v))
        for (auto bit : comp.coords()) out.push_back(f2.from_int(bit));
    return out;
}

// Solve z^2 + z = c in characteristic 2 by F_2-linear algebra; nullopt when
// the absolute trace of c is 1.
std::optional<RFElem> artin_schreier_solve(const ResidueField& rf, const RFElem& c) {
    const Field& base = rf.base();
    int k = base.degree();
    int D = k * rf.degree();
    auto f2 = Field::prime(2);
    FieldMatrix M(f2.get(), D, D);
    for (int col = 0; col < D; ++col) {
        // basis vector: coordinate col = (l, j) -> u_l * gen^j
        int l = col / k, j = col % k;
        std::vector<FieldElement> coords(rf.degree(), base.zero());
        std::vector<std::int64_t> cc(k, 0);
        cc[j] = 1;
        coords[l] = base.from_coords(cc);
        RFElem b = rf.from_phi(coords);
        RFElem lb = rf.add(rf.mul(b, b), b);
        auto flat = flatten_f2(rf, *f2, lb);
        for (int r = 0; r < D; ++r) M.at(r, col) = flat[r];
    }
    auto rhs = flatten_f2(rf, *f2, c);
    auto sol = solve_any(M, rhs);
    if (!sol) return std::nullopt;
    std::vector<FieldElement> coords(rf.degree(), base.zero());
    for (int col = 0; col < D; ++col) {
        if (sol->at(col).is_zero()) continue;
        int l = col / k, j = col % k;
        std::vector<std::int64_t> cc(k, 0);
        cc[j] = 1;
        coords[l] = coords[l] + base.from_coords(cc);
    }
    return rf.from_phi(coords);
}

struct Embedding {
    std::shared_ptr<const Field> src, dst;
    FieldElement gen_img;

    FieldElement operator()(const FieldElement& a) const {
        if (src->degree() == 1) return dst->from_int(a.coords()[0]);
        FieldElement r = dst->zero();
        for (size_t i = a.coords().size(); i-- > 0;)
            r = r * gen_img + dst->from_int(a.coords()[i]);
        return r;
    }
};

Embedding make_embedding(std::shared_ptr<const Field> src, std::shared_ptr<const Field> dst) {
    Embedding e{src, dst, dst->zero()};
    if (src->degree() > 1) {
        std::vector<std::int64_t> mod(src->modulus().begin(), src->modulus().end());
        Poly m = Poly::from_ints(*dst, mod);
        auto roots = poly_roots(m);
        if (roots.empty()) throw InternalError("modulus has no root in the extension");
        e.gen_img = roots.front();
    }
    return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Place construction

struct PlaceBuilder {
    static PlacePtr finish(std::unique_ptr<Place> p) {
        p->local_ = std::make_unique<LocalCtx>();
        p->uniformizer_ = uniformizer_at(*p->X_, *p);
        build_lifts(*p);
        return PlacePtr(p.release());
    }

    static void build_lifts(Place& p) {
        const CurveModel& X = *p.X_;
        std::vector<FunctionElement> lifts;
        switch (p.kind_) {
            case Place::Kind::HyperInfinity:
                lifts.push_back(FunctionElement::one(X));
                break;
            case Place::Kind::FiniteSplit:
            case Place::Kind::FiniteRamified: {
                FunctionElement xf = FunctionElement::coord_x(X);
                FunctionElement cur = FunctionElement::one(X);
                for (int i = 0; i < p.degree_; ++i) {
                    lifts.push_back(cur);
                    if (i + 1 < p.degree_) cur = cur * xf;
                }
                break;
            }
            case Place::Kind::FiniteInert: {
                int n = p.base_.degree();
                FunctionElement xf = FunctionElement::coord_x(X);
                FunctionElement yf = FunctionElement::coord_y(X);
                FunctionElement cur = FunctionElement::one(X);
                std::vector<FunctionElement> xpows;
                for (int i = 0; i < n; ++i) {
                    xpows.push_back(cur);
                    if (i + 1 < n) cur = cur * xf;
                }
                for (auto& u : xpows) lifts.push_back(u);
                for (auto& u : xpows) lifts.push_back(u * yf);
                break;
            }
            case Place::Kind::PlaneAffine:
            case Place::Kind::PlaneAtInfinity: {
                FunctionElement th = p.theta_function_;
                FunctionElement cur = FunctionElement::one(X);
                for (int i = 0; i < p.degree_; ++i) {
                    lifts.push_back(cur);
                    if (i + 1 < p.degree_) cur = cur * th;
                }
                break;
            }
        }
        p.lifts_ = std::move(lifts);
    }

    static std::unique_ptr<Place> core(const CurveModel* X, Place::Kind kind, int degree) {
        auto p = std::unique_ptr<Place>(new Place());
        p->X_ = X;
        p->kind_ = kind;
        p->degree_ = degree;
        return p;
    }
};

namespace {

// Chart coordinate ratio functions for a plane place.
std::pair<FunctionElement, FunctionElement> chart_functions(const CurveModel& X, int chart) {
    FunctionElement x = FunctionElement::coord_x(X);
    FunctionElement y = FunctionElement::coord_y(X);
    if (chart == 2) return {x, y};
    if (chart == 1) return {x / y, y.inv()};
    return {y / x, x.inv()};
}

std::vector<PlacePtr> hyper_places_over(const std::shared_ptr<const CurveModel>& X,
                                        const Poly& pi, int max_degree) {
    std::vector<PlacePtr> out;
    auto base = X->base_field_ptr();
    int n = pi.degree();
    auto rf_simple = std::make_shared<const ResidueField>(base, pi);
    RFElem hbar = rf_simple->from_poly(X->h());
    RFElem fbar = rf_simple->from_poly(X->f());
    auto mkplace = [&](Place::Kind kind, int deg, const Poly& ydatum,
                       std::shared_ptr<const ResidueField> rf) {
        auto p = PlaceBuilder::core(X.get(), kind, deg);
        p->base_ = pi;
        p->ydatum_ = ydatum;
        p->rf_ = std::move(rf);
        out.push_back(PlaceBuilder::finish(std::move(p)));
    };
    if (base->characteristic() == 2) {
        if (rf_simple->is_zero(hbar)) {
            if (n > max_degree) return out;
            // unique square root: ramified
            std::int64_t Q = rf_size_checked(*rf_simple);
            RFElem v = rf_simple->pow(fbar, Q / 2);
            mkplace(Place::Kind::FiniteRamified, n, v.a, rf_simple);
            return out;
        }
        RFElem c = rf_simple->mul(fbar, rf_simple->inv(rf_simple->mul(hbar, hbar)));
        auto z = artin_schreier_solve(*rf_simple, c);
        if (!z) {
            if (2 * n > max_degree) return out;
            mkplace(Place::Kind::FiniteInert, 2 * n, Poly(base.get()),
                    std::make_shared<const ResidueField>(base, pi,
                                                         InertQuadratic{X->h(), X->f()}));
            return out;
        }
        if (n > max_degree) return out;
        RFElem y1 = rf_simple->mul(hbar, *z);
        RFElem y2 = rf_simple->add(y1, hbar);
        std::vector<RFElem> roots{y1, y2};
        std::sort(roots.begin(), roots.end(), [&](const RFElem& a, const RFElem& b) {
            return rf_simple->order_key(a) < rf_simple->order_key(b);
        });
        for (auto& r : roots) mkplace(Place::Kind::FiniteSplit, n, r.a, rf_simple);
        return out;
    }
    // odd characteristic
    RFElem four = rf_simple->from_base(base->from_int(4));
    RFElem disc = rf_simple->add(rf_simple->mul(hbar, hbar), rf_simple->mul(four, fbar));
    RFElem half = rf_simple->from_base(base->from_int(2).inv());
    if (rf_simple->is_zero(disc)) {
        if (n > max_degree) return out;
        RFElem v = rf_simple->neg(rf_simple->mul(hbar, half));
        mkplace(Place::Kind::FiniteRamified, n, v.a, rf_simple);
        return out;
    }
    std::int64_t Q = rf_size_checked(*rf_simple);
    bool square = rf_simple->eq(rf_simple->pow(disc, (Q - 1) / 2), rf_simple->one());
    if (!square) {
        if (2 * n > max_degree) return out;
        mkplace(Place::Kind::FiniteInert, 2 * n, Poly(base.get()),
                std::make_shared<const ResidueField>(base, pi, InertQuadratic{X->h(), X->f()}));
        return out;
    }
    if (n > max_degree) return out;
    RFElem sq = rf_sqrt(*rf_simple, disc);
    RFElem y1 = rf_simple->mul(rf_simple->sub(sq, hbar), half);
    RFElem y2 = rf_simple->mul(rf_simple->sub(rf_simple->neg(sq), hbar), half);
    std::vector<RFElem> roots{y1, y2};
    std::sort(roots.begin(), roots.end(), [&](const RFElem& a, const RFElem& b) {
        return rf_simple->order_key(a) < rf_simple->order_key(b);
    });
    for (auto& r : roots) mkplace(Place::Kind::FiniteSplit, n, r.a, rf_simple);
    return out;
}

PlacePtr hyper_infinite_place(const std::shared_ptr<const CurveModel>& X) {
    auto base = X->base_field_ptr();
    auto p = PlaceBuilder::core(X.get(), Place::Kind::HyperInfinity, 1);
    p->base_ = Poly(base.get());
    p->rf_ = std::make_shared<const ResidueField>(base, Poly::x(*base));
    return PlaceBuilder::finish(std::move(p));
}

struct ProjPoint {
    FieldElement X, Y, Z;
};

ProjPoint frob(const Field& E, const ProjPoint& P, std::int64_t q) {
    return {P.X.pow(q), P.Y.pow(q), P.Z.pow(q)};
}

std::array<std::int64_t, 3> point_key(const ProjPoint& P) {
    return {P.X.index(), P.Y.index(), P.Z.index()};
}

bool coords_in_subfield(const ProjPoint& P, std::int64_t q, int e) {
    for (int f = 1; f < e; ++f) {
        if (e % f != 0) continue;
        std::int64_t qf = 1;
        for (int i = 0; i < f; ++i) qf *= q;
        if (P.X.pow(qf) == P.X && P.Y.pow(qf) == P.Y && P.Z.pow(qf) == P.Z) return true;
    }
    return false;
}

// Points of the plane curve over F_{q^e}, normalized representatives.
std::vector<ProjPoint> plane_points_over(const CurveModel& X, const Field& E) {
    const Field& K = X.base_field();
    std::vector<ProjPoint> pts;
    auto phi = X.y_charpoly();
    for (std::int64_t xi = 0; xi < E.size(); ++xi) {
        FieldElement x0 = E.element_at(xi);
        std::vector<FieldElement> cs;
        for (auto& pj : phi) {
            FieldElement v = E.zero();
            for (int i = pj.degree(); i >= 0; --i) v = v * x0 + E.from_int(pj.coeff(i).index());
            cs.push_back(v);
        }
        Poly A(&E, std::move(cs));
        if (A.is_zero()) throw InternalError("curve contains a vertical line");
        for (auto& r : poly_roots(A)) pts.push_back({x0, r, E.one()});
    }
    // z = 0: (0:1:0) when the Y^d coefficient vanishes, plus (1:r:0) for roots
    // of F(1,T,0).
    int d = X.plane_degree();
    FieldElement yd = K.zero();
    std::vector<FieldElement> bin(d + 1, E.zero());
    for (auto& m : X.form()) {
        if (m.ez != 0) continue;
        if (m.ex == 0 && m.ey == d) yd = yd + m.c;
        bin[m.ey] = bin[m.ey] + E.from_int(m.c.index());
    }
    if (yd.is_zero()) pts.push_back({E.zero(), E.one(), E.zero()});
    Poly U(&E, std::move(bin));
    if (!U.is_zero())
        for (auto& r : poly_roots(U)) pts.push_back({E.one(), r, E.zero()});
    return pts;
}

std::vector<PlacePtr> plane_places_of_degree(const std::shared_ptr<const CurveModel>& X, int e) {
    auto base = X->base_field_ptr();
    std::int64_t q = base->size();
    auto E = Field::extension(base->characteristic(), e);
    std::vector<PlacePtr> out;
    std::set<std::array<std::int64_t, 3>> seen;
    for (auto& P : plane_points_over(*X, *E)) {
        if (e > 1 && coords_in_subfield(P, q, e)) continue;
        // canonical representative: minimal key in the Frobenius orbit
        ProjPoint best = P, cur = P;
        int orbit = 1;
        for (;;) {
            cur = frob(*E, cur, q);
            if (point_key(cur) == point_key(P)) break;
            if (point_key(cur) < point_key(best)) best = cur;
            ++orbit;
            if (orbit > e) throw InternalError("Frobenius orbit longer than the field degree");
        }
        if (orbit != e) continue;
        if (!seen.insert(point_key(best)).second) continue;
        // chart and representative coordinates
        int chart;
        FieldElement r1 = E->zero(), r2 = E->zero();
        if (!best.Z.is_zero()) {
            chart = 2;
            FieldElement zi = best.Z.inv();
            r1 = best.X * zi;
            r2 = best.Y * zi;
        } else if (!best.Y.is_zero()) {
            chart = 1;
            FieldElement yi = best.Y.inv();
            r1 = best.X * yi;
            r2 = best.Z * yi;
        } else {
            chart = 0;
            FieldElement xi2 = best.X.inv();
            r1 = best.Y * xi2;
            r2 = best.Z * xi2;
        }
        // primitive element: first of r1, r2, r1 + c*r2 generating E
        auto generates = [&](const FieldElement& th) {
            EchelonState st(base.get(), e);
            FieldElement pw = E->one();
            for (int j = 0; j < e; ++j) {
                std::vector<FieldElement> col;
                for (auto c : pw.coords()) col.push_back(base->from_int(c));
                st.absorb(std::move(col));
                pw = pw * th;
            }
            return st.rank() == e;
        };
        FieldElement theta = r1;
        int theta_choice = -2;  // -2: r1, -1: r2, c >= 1: r1 + c*r2
        if (e == 1 || generates(r1)) {
            theta_choice = -2;
        } else if (generates(r2)) {
            theta = r2;
            theta_choice = -1;
        } else {
            bool found = false;
            for (std::int64_t ci = 1; ci < q; ++ci) {
                FieldElement c = E->from_int(base->element_at(ci).index());
                FieldElement cand = r1 + c * r2;
                if (generates(cand)) {
                    theta = cand;
                    theta_choice = static_cast<int>(ci);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw InternalError("no coordinate combination generates the residue field");
        }
        auto p = PlaceBuilder::core(X.get(),
                                    chart == 2 ? Place::Kind::PlaneAffine
                                               : Place::Kind::PlaneAtInfinity,
                                    e);
        p->chart_ = chart;
        p->rep_ = {r1, r2};
        p->E_ = E;
        p->rf_ = std::make_shared<const ResidueField>(base, E, theta);
        auto [c1f, c2f] = chart_functions(*X, chart);
        if (theta_choice == -2)
            p->theta_function_ = c1f;
        else if (theta_choice == -1)
            p->theta_function_ = c2f;
        else
            p->theta_function_ = c1f + c2f * base->element_at(theta_choice);
        if (chart == 2) {
            p->base_ = p->rf_->min_poly(p->rf_->from_realization(r1));
        } else {
            p->base_ = Poly(base.get());
        }
        out.push_back(PlaceBuilder::finish(std::move(p)));
    }
    return out;
}

}  // namespace

std::vector<PlacePtr> places_up_to(const std::shared_ptr<const CurveModel>& X, int m) {
    if (m < 1) throw InvalidInputError("place degree bound must be positive");
    std::vector<PlacePtr> out;
    if (X->family() == CurveFamily::Hyperelliptic) {
        out.push_back(hyper_infinite_place(X));
        for (auto& pi : irreducibles_up_to(X->base_field(), m)) {
            auto ps = hyper_places_over(X, pi, m);
            out.insert(out.end(), ps.begin(), ps.end());
        }
    } else {
        for (int e = 1; e <= m; ++e) {
            auto ps = plane_places_of_degree(X, e);
            out.insert(out.end(), ps.begin(), ps.end());
        }
    }
    std::sort(out.begin(), out.end(), place_less);
    return out;
}

std::int64_t count_points(const CurveModel& X, int e, std::int64_t budget) {
    auto base = X.base_field_ptr();
    std::int64_t size = 1;
    for (int i = 0; i < e * base->degree(); ++i) {
        size *= base->characteristic();
        if (size > budget) throw ResourceError("point count budget exceeded");
    }
    if (X.family() == CurveFamily::Hyperelliptic) {
        auto E = Field::extension(base->characteristic(), base->degree() * e);
        auto emb = make_embedding(base, E);
        std::vector<FieldElement> hc, fc;
        for (int i = 0; i <= X.h().degree(); ++i) hc.push_back(emb(X.h().coeff(i)));
        for (int i = 0; i <= X.f().degree(); ++i) fc.push_back(emb(X.f().coeff(i)));
        auto eval = [&](const std::vector<FieldElement>& cs, const FieldElement& at) {
            FieldElement r = E->zero();
            for (size_t i = cs.size(); i-- > 0;) r = r * at + cs[i];
            return r;
        };
        std::int64_t n = 1;  // the point at infinity
        bool char2 = base->characteristic() == 2;
        int dim = E->degree();
        for (std::int64_t xi = 0; xi < E->size(); ++xi) {
            FieldElement x0 = E->element_at(xi);
            FieldElement hv = eval(hc, x0), fv = eval(fc, x0);
            if (char2) {
                if (hv.is_zero()) {
                    n += 1;
                } else {
                    // roots iff Tr(f/h^2) = 0
                    FieldElement c = fv / (hv * hv);
                    FieldElement tr = E->zero(), pw = c;
                    for (int i = 0; i < dim; ++i) {
                        tr = tr + pw;
                        pw = pw * pw;
                    }
                    n += tr.is_zero() ? 2 : 0;
                }
            } else {
                FieldElement disc = hv * hv + fv * E->from_int(4);
                if (disc.is_zero())
                    n += 1;
                else
                    n += disc.pow((E->size() - 1) / 2).is_one() ? 2 : 0;
            }
        }
        return n;
    }
    // plane model: count affine y-roots per x plus points on z = 0
    auto E = Field::extension(base->characteristic(), e);
    std::int64_t n = 0;
    const auto& phi = X.y_charpoly();
    for (std::int64_t xi = 0; xi < E->size(); ++xi) {
        FieldElement x0 = E->element_at(xi);
        std::vector<FieldElement> cs;
        for (auto& pj : phi) {
            FieldElement v = E->zero();
            for (int i = pj.degree(); i >= 0; --i) v = v * x0 + E->from_int(pj.coeff(i).index());
            cs.push_back(v);
        }
        Poly A(E.get(), std::move(cs));
        if (A.is_zero()) throw InternalError("curve contains a vertical line");
        if (A.degree() == 0) continue;
        Poly x = Poly::x(*E);
        Poly xq = pow_mod(x, E->size(), A.monic());
        n += gcd(xq - x, A).degree();
    }
    int d = X.plane_degree();
    FieldElement yd = X.base_field().zero();
    std::vector<FieldElement> bin(d + 1, E->zero());
    for (auto& m : X.form()) {
        if (m.ez != 0) continue;
        if (m.ex == 0 && m.ey == d) yd = yd + m.c;
        bin[m.ey] = bin[m.ey] + E->from_int(m.c.index());
    }
    if (yd.is_zero()) n += 1;
    Poly U(E.get(), std::move(bin));
    if (!U.is_zero() && U.degree() > 0) {
        Poly x = Poly::x(*E);
        Poly xq = pow_mod(x, E->size(), U.monic());
        n += gcd(xq - x, U).degree();
    } else if (!U.is_zero() && U.degree() == 0) {
        // no roots
    }
    return n;
}

// ---------------------------------------------------------------------------

FunctionElement uniformizer_at(const CurveModel& X, const Place& x) {
    switch (x.kind()) {
        case Place::Kind::HyperInfinity: {
            FunctionElement f =
                FunctionElement::coord_x(X).pow(X.genus()) / FunctionElement::coord_y(X);
            if (valuation_at(f, x) != 1)
                throw InternalError("x^g/y is not a uniformizer at infinity");
            return f;
        }
        case Place::Kind::FiniteSplit:
        case Place::Kind::FiniteInert:
        case Place::Kind::FiniteRamified: {
            FunctionElement cand = FunctionElement::from_poly(X, x.base_point());
            if (valuation_at(cand, x) == 1) return cand;
            const ResidueField& rf = x.residue_field();
            RFElem ybar = x.kind() == Place::Kind::FiniteInert ? rf.ybar()
                                                               : rf.from_poly(x.y_datum());
            Poly mu = rf.min_poly(ybar);
            FunctionElement y = FunctionElement::coord_y(X);
            FunctionElement f = FunctionElement::zero(X);
            FunctionElement pw = FunctionElement::one(X);
            for (int i = 0; i <= mu.degree(); ++i) {
                f = f + pw * mu.coeff(i);
                if (i < mu.degree()) pw = pw * y;
            }
            if (valuation_at(f, x) != 1)
                throw InternalError("no coordinate minimal polynomial uniformizes the place");
            return f;
        }
        case Place::Kind::PlaneAffine:
        case Place::Kind::PlaneAtInfinity: {
            auto [z1, z2] = chart_functions(X, x.chart());
            const ResidueField& rf = x.residue_field();
            std::array<std::pair<FunctionElement, RFElem>, 2> cands{
                std::make_pair(z1, rf.from_realization(x.rep_first())),
                std::make_pair(z2, rf.from_realization(x.rep_second()))};
            for (auto& [zf, a] : cands) {
                Poly mu = rf.min_poly(a);
                FunctionElement f = FunctionElement::zero(X);
                FunctionElement pw = FunctionElement::one(X);
                for (int i = 0; i <= mu.degree(); ++i) {
                    f = f + pw * mu.coeff(i);
                    if (i < mu.degree()) pw = pw * zf;
                }
                if (!f.is_zero() && valuation_at(f, x) == 1) return f;
            }
            throw InternalError("no coordinate minimal polynomial uniformizes the place");
        }
    }
    throw InternalError("unreachable");
}

// ---------------------------------------------------------------------------

void Divisor::add(const PlacePtr& x, int mult) {
    if (mult == 0) return;
    for (auto it = t_.begin(); it != t_.end(); ++it) {
        if (place_same(*it->first, *x)) {
            it->second += mult;
            if (it->second == 0) t_.erase(it);
            return;
        }
        if (place_less(x, it->first)) {
            t_.insert(it, {x, mult});
            return;
        }
    }
    t_.push_back({x, mult});
}

int Divisor::multiplicity(const Place& x) const {
    for (auto& [p, m] : t_)
        if (place_same(*p, x)) return m;
    return 0;
}

int Divisor::degree() const {
    int d = 0;
    for (auto& [p, m] : t_) d += p->degree() * m;
    return d;
}

bool Divisor::is_effective() const {
    for (auto& [p, m] : t_)
        if (m < 0) return false;
    return true;
}

Divisor Divisor::single(const PlacePtr& x, int mult) {
    Divisor d;
    d.add(x, mult);
    return d;
}

} // namespace curvearith
