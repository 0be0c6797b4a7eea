#include "curvearith/poly.hpp"

#include <sstream>

#include "curvearith/counters.hpp"
#include "curvearith/errors.hpp"

namespace curvearith {

Poly::Poly(const Field* field, std::vector<FieldElement> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(const Field& f) { return Poly(&f, {f.one()}); }

Poly Poly::x(const Field& f) { return Poly(&f, {f.zero(), f.one()}); }

Poly Poly::constant(FieldElement c) {
    const Field* f = &c.field();
    return Poly(f, {std::move(c)});
}

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& cs) {
    std::vector<FieldElement> v;
    v.reserve(cs.size());
    for (auto c : cs) v.push_back(f.from_int(c));
    return Poly(&f, std::move(v));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[i];
}

FieldElement Poly::leading() const {
    if (c_.empty()) throw InvalidInputError("zero polynomial has no leading coefficient");
    return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<FieldElement> r(c_);
    for (auto& e : r) e = -e;
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    OpCounters::global().poly_ops.fetch_add(1, std::memory_order_relaxed);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> r(c_);
    for (auto& e : r) e = e * s;
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return *this * c_.back().inv();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_->from_int(static_cast<std::int64_t>(i)));
    return Poly(field_, std::move(r));
}

FieldElement Poly::eval(const FieldElement& a) const {
    FieldElement r = field_->zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
}

Poly Poly::shifted(int n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<FieldElement> r(c_.size() + n, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i + n] = c_[i];
    return Poly(field_, std::move(r));
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !c_[i].is_one()) os << c_[i].str();
        if (i >= 1) {
            if (!c_[i].is_one()) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        std::int64_t x = a.c_[i].index(), y = b.c_[i].index();
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidInputError("polynomial division by zero");
    OpCounters::global().poly_ops.fetch_add(1, std::memory_order_relaxed);
    const Field& F = a.field();
    std::vector<FieldElement> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly(&F), a};
    std::vector<FieldElement> q(a.degree() - db + 1, F.zero());
    FieldElement lcinv = b.leading().inv();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        FieldElement c = rem[i] * lcinv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - c * b.coeff(j);
    }
    return {Poly(&F, std::move(q)), Poly(&F, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        Poly t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    FieldElement lcinv = r0.leading().inv();
    return {r0 * lcinv, s0 * lcinv, t0 * lcinv};
}

Poly pow_mod(const Poly& base, std::int64_t e, const Poly& m) {
    Poly b = mod(base, m);
    Poly r = Poly::one(base.field());
    while (e > 0) {
        if (e & 1) r = mod(r * b, m);
        e >>= 1;
        if (e) b = mod(b * b, m);
    }
    return r;
}

Poly frobenius_pow_mod(const Poly& base, std::int64_t q, int iter, const Poly& m) {
    Poly r = mod(base, m);
    for (int i = 0; i < iter; ++i) r = pow_mod(r, q, m);
    return r;
}

Poly inv_mod(const Poly& a, const Poly& m) {
    auto r = xgcd(mod(a, m), m);
    if (r.g.degree() != 0)
        throw InvalidInputError("element not invertible modulo the given polynomial");
    return mod(r.u, m);
}

} // namespace curvearith
