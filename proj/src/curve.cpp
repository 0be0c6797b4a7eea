#include "curvearith/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "curvearith/counters.hpp"
#include "curvearith/errors.hpp"
#include "curvearith/matrix.hpp"

namespace curvearith {

namespace {

int monomial_count(int deg) { return (deg + 1) * (deg + 2) / 2; }

// Index of X^a Y^b Z^(deg-a-b) in the degree-deg monomial basis.
int monomial_index(int a, int b, int deg) {
    int idx = 0;
    for (int aa = 0; aa < a; ++aa) idx += deg - aa + 1;
    return idx + b;
}

std::vector<PlaneMonomial> partial(const std::vector<PlaneMonomial>& F, int var) {
    std::vector<PlaneMonomial> out;
    for (const auto& m : F) {
        int e = var == 0 ? m.ex : var == 1 ? m.ey : m.ez;
        if (e == 0) continue;
        FieldElement c = m.c * m.c.field().from_int(e);
        if (c.is_zero()) continue;
        PlaneMonomial d = m;
        d.c = c;
        (var == 0 ? d.ex : var == 1 ? d.ey : d.ez) -= 1;
        out.push_back(d);
    }
    return out;
}

// Smoothness over the algebraic closure: the partials (and F itself, needed
// when char | d) have no common projective zero iff the degree-N graded piece
// of the ideal they generate is everything, for N past the Macaulay bound.
bool plane_is_smooth(const Field& K, const std::vector<PlaneMonomial>& F, int d) {
    int N = 3 * (d - 1);
    std::vector<std::vector<PlaneMonomial>> gens{partial(F, 0), partial(F, 1), partial(F, 2), F};
    std::vector<std::vector<FieldElement>> rows;
    int cols = monomial_count(N);
    for (const auto& g : gens) {
        if (g.empty()) continue;
        int gd = g[0].ex + g[0].ey + g[0].ez;
        int md = N - gd;
        for (int a = 0; a <= md; ++a)
            for (int b = 0; a + b <= md; ++b) {
                std::vector<FieldElement> row(cols, K.zero());
                for (const auto& m : g)
                    row[monomial_index(m.ex + a, m.ey + b, N)] =
                        row[monomial_index(m.ex + a, m.ey + b, N)] + m.c;
                rows.push_back(std::move(row));
            }
    }
    FieldMatrix M(&K, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < cols; ++c) M.at(r, c) = rows[r][c];
    return rank_of(M) == cols;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::shared_ptr<const CurveModel> CurveModel::hyperelliptic(std::shared_ptr<const Field> k,
                                                            Poly h, Poly f) {
    if (f.is_zero()) throw InvalidInputError("hyperelliptic model: f must be nonzero");
    if (f.degree() % 2 == 0)
        throw InvalidInputError(
            "hyperelliptic model: deg f must be odd (2g+1); real models with two places at "
            "infinity are not supported");
    if (f.degree() < 3) throw InvalidInputError("hyperelliptic model: deg f >= 3 required (g >= 1)");
    int g = (f.degree() - 1) / 2;
    if (h.degree() > g) throw InvalidInputError("hyperelliptic model: deg h <= g required");
    const Field& K = *k;
    if (K.characteristic() == 2) {
        if (h.is_zero())
            throw InvalidInputError("hyperelliptic model: h = 0 is singular in characteristic 2");
        // singular iff h and h'^2 f + f'^2 share a root over the closure
        Poly dh = h.derivative(), df = f.derivative();
        Poly s = dh * dh * f + df * df;
        if (gcd(h, s).degree() > 0)
            throw InvalidInputError("hyperelliptic model: affine model is singular");
    } else {
        Poly disc = h * h + f * K.from_int(4);
        Poly g1 = gcd(disc, disc.derivative());
        if (g1.degree() > 0)
            throw InvalidInputError("hyperelliptic model: h^2 + 4f has a repeated factor (" +
                                    g1.str() + "); the affine model is singular");
    }
    auto X = std::shared_ptr<CurveModel>(new CurveModel());
    X->family_ = CurveFamily::Hyperelliptic;
    X->k_ = std::move(k);
    X->genus_ = g;
    X->h_ = std::move(h);
    X->f_ = std::move(f);
    X->phi_ = {-X->f_, X->h_, Poly::one(K)};
    return X;
}

std::shared_ptr<const CurveModel> CurveModel::plane(std::shared_ptr<const Field> k,
                                                    std::vector<PlaneMonomial> F) {
    const Field& K = *k;
    if (K.degree() != 1)
        throw InvalidInputError("plane models over proper extension fields are not supported");
    std::map<std::tuple<int, int, int>, FieldElement> merged;
    int d = -1;
    for (auto& m : F) {
        if (m.ex < 0 || m.ey < 0 || m.ez < 0) throw InvalidInputError("negative exponent");
        int deg = m.ex + m.ey + m.ez;
        if (d < 0) d = deg;
        if (deg != d) throw InvalidInputError("plane model: form is not homogeneous");
        auto key = std::make_tuple(m.ex, m.ey, m.ez);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, m.c);
        else
            it->second = it->second + m.c;
    }
    std::vector<PlaneMonomial> clean;
    for (auto& [key, c] : merged)
        if (!c.is_zero())
            clean.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    if (clean.empty()) throw InvalidInputError("plane model: zero form");
    if (d < 3) throw InvalidInputError("plane model: degree >= 3 required (g >= 1)");
    if (!plane_is_smooth(K, clean, d))
        throw InvalidInputError("plane model: the projective curve is singular");
    auto X = std::shared_ptr<CurveModel>(new CurveModel());
    X->family_ = CurveFamily::Plane;
    X->k_ = std::move(k);
    X->d_ = d;
    X->genus_ = (d - 1) * (d - 2) / 2;
    X->F_ = std::move(clean);
    // Phi(x, Y) = F(x, Y, 1)
    int t = 0;
    for (auto& m : X->F_) t = std::max(t, m.ey);
    std::vector<Poly> phi(t + 1, Poly(&K));
    for (auto& m : X->F_) {
        std::vector<FieldElement> cs(m.ex + 1, K.zero());
        cs[m.ex] = m.c;
        phi[m.ey] = phi[m.ey] + Poly(&K, std::move(cs));
    }
    X->phi_ = std::move(phi);
    if (X->y_degree() < 2) throw InternalError("smooth plane curve with y-degree < 2");
    return X;
}

std::vector<Poly> CurveModel::chart_equation(int chart) const {
    const Field& K = *k_;
    if (family_ == CurveFamily::Hyperelliptic) {
        if (chart != 2) throw InternalError("hyperelliptic models have a single affine chart");
        return phi_;
    }
    int second_deg = 0;
    for (auto& m : F_)
        second_deg = std::max(second_deg, chart == 2 ? m.ey : m.ez);
    std::vector<Poly> out(second_deg + 1, Poly(&K));
    for (auto& m : F_) {
        int first = chart == 2 ? m.ex : chart == 1 ? m.ex : m.ey;
        int second = chart == 2 ? m.ey : m.ez;
        std::vector<FieldElement> cs(first + 1, K.zero());
        cs[first] = m.c;
        out[second] = out[second] + Poly(&K, std::move(cs));
    }
    return out;
}

std::string CurveModel::canonical_description() const {
    std::ostringstream os;
    os << (family_ == CurveFamily::Hyperelliptic ? "hyperelliptic" : "plane");
    os << ";p=" << k_->characteristic() << ";k=" << k_->degree() << ";mod=";
    for (auto c : k_->modulus()) os << c << ",";
    if (family_ == CurveFamily::Hyperelliptic) {
        os << ";h=";
        for (int i = 0; i <= h_.degree(); ++i) os << h_.coeff(i).index() << ",";
        os << ";f=";
        for (int i = 0; i <= f_.degree(); ++i) os << f_.coeff(i).index() << ",";
    } else {
        os << ";F=";
        for (auto& m : F_)
            os << m.ex << "." << m.ey << "." << m.ez << ":" << m.c.index() << ",";
    }
    return os.str();
}

std::string CurveModel::hash() const {
    std::uint64_t h = fnv1a(canonical_description());
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::shared_ptr<const CurveModel> validate_model(const CurveData& data) {
    auto field = Field::extension(data.p, data.k);
    if (data.family == CurveFamily::Hyperelliptic) {
        auto mk = [&](const std::vector<std::vector<std::int64_t>>& cs) {
            std::vector<FieldElement> v;
            v.reserve(cs.size());
            for (auto& c : cs) v.push_back(field->from_coords(c));
            return Poly(field.get(), std::move(v));
        };
        return CurveModel::hyperelliptic(field, mk(data.h), mk(data.f));
    }
    std::vector<PlaneMonomial> F;
    for (auto& m : data.monomials) F.push_back({m.ex, m.ey, m.ez, field->from_coords(m.c)});
    return CurveModel::plane(field, std::move(F));
}

// ---------------------------------------------------------------------------
// Function-field elements

namespace {

int ydeg(const std::vector<Poly>& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[d].is_zero()) --d;
    return d;
}

void ytrim(std::vector<Poly>& a) { a.resize(ydeg(a) + 1); }

std::vector<Poly> ymul(const CurveModel& X, const std::vector<Poly>& a,
                       const std::vector<Poly>& b) {
    const Field& K = X.base_field();
    if (a.empty() || b.empty()) return {};
    std::vector<Poly> r(a.size() + b.size() - 1, Poly(&K));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

std::vector<Poly> yscale(const std::vector<Poly>& a, const Poly& s) {
    std::vector<Poly> r;
    r.reserve(a.size());
    for (auto& c : a) r.push_back(c * s);
    return r;
}

std::vector<Poly> ysub(const CurveModel& X, const std::vector<Poly>& a,
                       const std::vector<Poly>& b) {
    const Field& K = X.base_field();
    std::vector<Poly> r(std::max(a.size(), b.size()), Poly(&K));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

std::vector<Poly> yadd(const CurveModel& X, const std::vector<Poly>& a,
                       const std::vector<Poly>& b) {
    const Field& K = X.base_field();
    std::vector<Poly> r(std::max(a.size(), b.size()), Poly(&K));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Poly ycontent(const std::vector<Poly>& a) {
    Poly g = a.empty() ? Poly() : Poly(&a[0].field());
    for (auto& c : a) g = gcd(g, c);
    return g;
}

// Reduce the y-degree below deg_Y Phi, tracking the denominator factor the
// pseudo-steps introduce.
void yreduce(const CurveModel& X, std::vector<Poly>& num, Poly& den) {
    const auto& phi = X.y_charpoly();
    int t = X.y_degree();
    const Poly& lcy = X.y_leading();
    bool const_lc = lcy.is_constant();
    ytrim(num);
    while (static_cast<int>(num.size()) - 1 >= t) {
        int j = static_cast<int>(num.size()) - 1;
        Poly lead = num.back();
        num.pop_back();
        if (lead.is_zero()) continue;
        if (const_lc) {
            Poly s = lead * lcy.leading().inv();
            for (int i = 0; i < t; ++i) num[j - t + i] = num[j - t + i] - s * phi[i];
        } else {
            for (auto& c : num) c = c * lcy;
            for (int i = 0; i < t; ++i) num[j - t + i] = num[j - t + i] - lead * phi[i];
            den = den * lcy;
        }
        ytrim(num);
    }
}

struct PremResult {
    std::vector<Poly> rem, quot;
    Poly mult;  // mult * A = quot * B + rem
};

PremResult yprem(const CurveModel& X, std::vector<Poly> A, const std::vector<Poly>& B) {
    const Field& K = X.base_field();
    int db = ydeg(B);
    Poly lcb = B[db];
    PremResult out;
    out.quot.assign(1, Poly(&K));
    out.mult = Poly::one(K);
    ytrim(A);
    while (ydeg(A) >= db && !A.empty()) {
        int da = ydeg(A);
        Poly s = A[da];
        // A <- lcb*A - s*Y^(da-db)*B ; quot <- lcb*quot + s*Y^(da-db)
        A = yscale(A, lcb);
        std::vector<Poly> sb(da - db, Poly(&K));
        for (int i = 0; i <= db; ++i) sb.push_back(s * B[i]);
        A = ysub(X, A, sb);
        out.quot = yscale(out.quot, lcb);
        if (static_cast<int>(out.quot.size()) <= da - db) out.quot.resize(da - db + 1, Poly(&K));
        out.quot[da - db] = out.quot[da - db] + s;
        out.mult = out.mult * lcb;
        ytrim(A);
    }
    out.rem = std::move(A);
    return out;
}

}  // namespace

FunctionElement::FunctionElement(const CurveModel* X, std::vector<Poly> num, Poly den)
    : X_(X), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void FunctionElement::normalize() {
    const Field& K = X_->base_field();
    if (den_.is_zero()) throw InvalidInputError("function element with zero denominator");
    yreduce(*X_, num_, den_);
    ytrim(num_);
    if (num_.empty()) {
        den_ = Poly::one(K);
        return;
    }
    Poly g = gcd(ycontent(num_), den_);
    if (g.degree() > 0) {
        for (auto& c : num_) c = divmod(c, g).first;
        den_ = divmod(den_, g).first;
    }
    FieldElement lc = den_.leading();
    if (!lc.is_one()) {
        FieldElement inv = lc.inv();
        den_ = den_ * inv;
        for (auto& c : num_) c = c * inv;
    }
}

FunctionElement FunctionElement::zero(const CurveModel& X) {
    return FunctionElement(&X, {}, Poly::one(X.base_field()));
}

FunctionElement FunctionElement::one(const CurveModel& X) {
    return FunctionElement(&X, {Poly::one(X.base_field())}, Poly::one(X.base_field()));
}

FunctionElement FunctionElement::constant(const CurveModel& X, const FieldElement& c) {
    return FunctionElement(&X, {Poly::constant(c)}, Poly::one(X.base_field()));
}

FunctionElement FunctionElement::coord_x(const CurveModel& X) {
    return FunctionElement(&X, {Poly::x(X.base_field())}, Poly::one(X.base_field()));
}

FunctionElement FunctionElement::coord_y(const CurveModel& X) {
    const Field& K = X.base_field();
    return FunctionElement(&X, {Poly(&K), Poly::one(K)}, Poly::one(K));
}

FunctionElement FunctionElement::from_poly(const CurveModel& X, const Poly& a) {
    return FunctionElement(&X, {a}, Poly::one(X.base_field()));
}

FunctionElement FunctionElement::make(const CurveModel& X, std::vector<Poly> num, Poly den) {
    return FunctionElement(&X, std::move(num), std::move(den));
}

bool FunctionElement::is_constant() const {
    return num_.empty() || (num_.size() == 1 && num_[0].is_constant() && den_.is_constant());
}

Poly FunctionElement::num_coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(num_.size())) return Poly(&X_->base_field());
    return num_[j];
}

FunctionElement FunctionElement::operator+(const FunctionElement& o) const {
    OpCounters::global().funcfield_ops.fetch_add(1, std::memory_order_relaxed);
    std::vector<Poly> n = yadd(*X_, yscale(num_, o.den_), yscale(o.num_, den_));
    return FunctionElement(X_, std::move(n), den_ * o.den_);
}

FunctionElement FunctionElement::operator-(const FunctionElement& o) const {
    OpCounters::global().funcfield_ops.fetch_add(1, std::memory_order_relaxed);
    std::vector<Poly> n = ysub(*X_, yscale(num_, o.den_), yscale(o.num_, den_));
    return FunctionElement(X_, std::move(n), den_ * o.den_);
}

FunctionElement FunctionElement::operator-() const {
    std::vector<Poly> n;
    n.reserve(num_.size());
    for (auto& c : num_) n.push_back(-c);
    return FunctionElement(X_, std::move(n), den_);
}

FunctionElement FunctionElement::operator*(const FunctionElement& o) const {
    OpCounters::global().funcfield_ops.fetch_add(1, std::memory_order_relaxed);
    return FunctionElement(X_, ymul(*X_, num_, o.num_), den_ * o.den_);
}

FunctionElement FunctionElement::operator*(const FieldElement& s) const {
    std::vector<Poly> n;
    n.reserve(num_.size());
    for (auto& c : num_) n.push_back(c * s);
    return FunctionElement(X_, std::move(n), den_);
}

FunctionElement FunctionElement::inv() const {
    OpCounters::global().funcfield_ops.fetch_add(1, std::memory_order_relaxed);
    if (is_zero()) throw InvalidInputError("inverse of the zero function");
    const Field& K = X_->base_field();
    if (y_deg() <= 0) {
        // purely rational in x
        return FunctionElement(X_, {den_}, num_[0]);
    }
    // Pseudo-XGCD against Phi over k[x][Y]: maintain U_i with
    // U_i * num == R_i (mod Phi) up to k[x] scaling; ends with R of
    // y-degree 0 because Phi is irreducible over k(x).
    std::vector<Poly> R0 = X_->y_charpoly(), R1 = num_;
    std::vector<Poly> U0{Poly(&K)}, U1{Poly::one(K)};
    while (ydeg(R1) > 0) {
        PremResult pr = yprem(*X_, R0, R1);
        // U2 = mult*U0 - quot*U1 (mod nothing; keep reduced below later)
        std::vector<Poly> U2 = ysub(*X_, yscale(U0, pr.mult), ymul(*X_, pr.quot, U1));
        // joint content reduction keeps coefficient growth in check
        Poly g = gcd(ycontent(pr.rem), ycontent(U2));
        if (g.degree() > 0) {
            for (auto& c : pr.rem) c = divmod(c, g).first;
            for (auto& c : U2) c = divmod(c, g).first;
        }
        R0 = std::move(R1);
        R1 = std::move(pr.rem);
        U0 = std::move(U1);
        U1 = std::move(U2);
        if (R1.empty()) throw InternalError("function inversion hit a zero remainder");
    }
    // U1 * num == r (mod Phi) with r in k[x]; also fold the y-reduction that
    // U1*num may still need.
    Poly r = R1.empty() ? Poly(&K) : R1[0];
    if (r.is_zero()) throw InternalError("function inversion produced a zero resultant");
    std::vector<Poly> n = yscale(U1, den_);
    return FunctionElement(X_, std::move(n), std::move(r));
}

FunctionElement FunctionElement::operator/(const FunctionElement& o) const {
    return *this * o.inv();
}

FunctionElement FunctionElement::pow(int e) const {
    if (e == 0) return one(*X_);
    FunctionElement b = e < 0 ? inv() : *this;
    int n = e < 0 ? -e : e;
    FunctionElement r = one(*X_);
    while (n > 0) {
        if (n & 1) r = r * b;
        b = n > 1 ? b * b : b;
        n >>= 1;
    }
    return r;
}

bool FunctionElement::operator==(const FunctionElement& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string FunctionElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t j = 0; j < num_.size(); ++j) {
        if (num_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << num_[j].str() << ")";
        if (j == 1) os << "*y";
        if (j > 1) os << "*y^" << j;
    }
    os << ")";
    if (den_.degree() > 0 || !den_.is_monic()) os << "/(" << den_.str() << ")";
    return os.str();
}

} // namespace curvearith
