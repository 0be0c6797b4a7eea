#include "curvearith/field.hpp"

#include <algorithm>
#include <sstream>

#include "curvearith/errors.hpp"
#include "curvearith/poly.hpp"

namespace curvearith {

bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::int64_t pospow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Irreducibility over F_p for the bootstrap modulus search; works on raw
// coefficient vectors so it can run before the extension field exists.
std::int64_t modp(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::vector<std::int64_t> polymulp(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

void polytrim(std::vector<std::int64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<std::int64_t> polymodp(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& m, std::int64_t p) {
    polytrim(a);
    while (a.size() >= m.size()) {
        std::int64_t c = a.back();  // m monic
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = modp(a[shift + i] - c * m[i], p);
        polytrim(a);
    }
    return a;
}

std::vector<std::int64_t> polypowmodp(std::vector<std::int64_t> b, std::int64_t e,
                                      const std::vector<std::int64_t>& m, std::int64_t p) {
    std::vector<std::int64_t> r{1};
    b = polymodp(std::move(b), m, p);
    while (e > 0) {
        if (e & 1) r = polymodp(polymulp(r, b, p), m, p);
        e >>= 1;
        if (e) b = polymodp(polymulp(b, b, p), m, p);
    }
    return r;
}

std::vector<std::int64_t> polygcdp(std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                                   std::int64_t p) {
    polytrim(a);
    polytrim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        std::int64_t lcinv = 1;
        {  // inverse of b's leading coefficient mod p
            std::int64_t x = b.back() % p, r = 1, e = p - 2;
            while (e > 0) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            lcinv = r;
        }
        std::vector<std::int64_t> bm = b;
        for (auto& c : bm) c = c * lcinv % p;
        a = polymodp(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool irreducible_p(const std::vector<std::int64_t>& m, std::int64_t p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1) return false;
    // x^(p^k) == x mod m, and gcd(x^(p^(k/l)) - x, m) trivial for prime l | k.
    std::vector<std::int64_t> xp{0, 1};
    std::vector<std::int64_t> acc = xp;
    std::vector<std::vector<std::int64_t>> powers(k + 1);
    powers[0] = polymodp(xp, m, p);
    for (int i = 1; i <= k; ++i)
        powers[i] = polypowmodp(powers[i - 1], p, m, p);
    auto sub_x = [&](std::vector<std::int64_t> a) {
        if (a.size() < 2) a.resize(2, 0);
        a[1] = modp(a[1] - 1, p);
        polytrim(a);
        return a;
    };
    if (!sub_x(powers[k]).empty()) return false;
    for (int l = 2; l <= k; ++l) {
        if (k % l != 0 || !is_prime_int(l)) continue;
        auto g = polygcdp(sub_x(powers[k / l]), m, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

}  // namespace

Field::Field(std::int64_t p, int k, std::vector<std::int64_t> modulus)
    : p_(p), k_(k), mod_(std::move(modulus)) {
    q_ = pospow(p_, k_);
    if (k_ > 1) {
        red_.resize(k_);
        for (int i = 0; i < k_; ++i) red_[i] = modp(-mod_[i], p_);
    }
}

std::shared_ptr<const Field> Field::prime(std::int64_t p) {
    if (!is_prime_int(p)) throw InvalidInputError("field characteristic must be prime");
    return std::shared_ptr<const Field>(new Field(p, 1, {}));
}

std::shared_ptr<const Field> Field::extension(std::int64_t p, int k) {
    if (!is_prime_int(p)) throw InvalidInputError("field characteristic must be prime");
    if (k < 1) throw InvalidInputError("extension degree must be positive");
    if (k == 1) return prime(p);
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw ResourceError("field size exceeds supported bound");
    }
    // Least monic irreducible of degree k, ordered by the integer encoding
    // of the non-leading coefficients.
    std::int64_t bound = q;
    for (std::int64_t n = 0; n < bound; ++n) {
        std::vector<std::int64_t> m(k + 1, 0);
        std::int64_t v = n;
        for (int i = 0; i < k; ++i) {
            m[i] = v % p;
            v /= p;
        }
        m[k] = 1;
        if (irreducible_p(m, p))
            return std::shared_ptr<const Field>(new Field(p, k, std::move(m)));
    }
    throw InternalError("no irreducible modulus found");  // unreachable
}

std::shared_ptr<const Field> Field::extension(std::int64_t p, int k,
                                              std::vector<std::int64_t> modulus) {
    if (!is_prime_int(p)) throw InvalidInputError("field characteristic must be prime");
    if (k < 1) throw InvalidInputError("extension degree must be positive");
    if (k == 1) {
        if (!modulus.empty()) throw InvalidInputError("prime field takes no modulus");
        return prime(p);
    }
    if (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1)
        throw InvalidInputError("modulus must be monic of degree k");
    for (auto& c : modulus) c = modp(c, p);
    if (!irreducible_p(modulus, p)) throw InvalidInputError("modulus is reducible");
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw ResourceError("field size exceeds supported bound");
    }
    return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

FieldElement Field::zero() const { return FieldElement(this, std::vector<std::int64_t>(k_, 0)); }

FieldElement Field::one() const {
    std::vector<std::int64_t> c(k_, 0);
    c[0] = 1;
    return FieldElement(this, std::move(c));
}

FieldElement Field::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(k_, 0);
    c[0] = modp(v, p_);
    return FieldElement(this, std::move(c));
}

FieldElement Field::from_coords(std::vector<std::int64_t> c) const {
    if (static_cast<int>(c.size()) > k_) throw InvalidInputError("too many coordinates");
    c.resize(k_, 0);
    for (auto& v : c) v = modp(v, p_);
    return FieldElement(this, std::move(c));
}

FieldElement Field::element_at(std::int64_t index) const {
    std::vector<std::int64_t> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FieldElement(this, std::move(c));
}

FieldElement Field::generator() const {
    if (k_ == 1) throw InvalidInputError("prime field has no extension generator");
    std::vector<std::int64_t> c(k_, 0);
    c[1] = 1;
    return FieldElement(this, std::move(c));
}

FieldElement Field::pth_root(const FieldElement& a) const {
    // a^(p^(k-1)) inverts the Frobenius x -> x^p.
    FieldElement r = a;
    for (int i = 0; i < k_ - 1; ++i) {
        FieldElement s = r;
        std::int64_t e = p_;
        FieldElement acc = one();
        while (e > 0) {
            if (e & 1) acc = acc * s;
            s = s * s;
            e >>= 1;
        }
        r = acc;
    }
    return r;
}

std::vector<std::int64_t> Field::mul_coords(const std::vector<std::int64_t>& a,
                                            const std::vector<std::int64_t>& b) const {
    if (k_ == 1) return {a[0] * b[0] % p_};
    std::vector<std::int64_t> t(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p_;
    }
    // fold down x^m for m >= k using x^k = red_
    for (int m = 2 * k_ - 2; m >= k_; --m) {
        std::int64_t c = t[m];
        if (c == 0) continue;
        t[m] = 0;
        for (int i = 0; i < k_; ++i) t[m - k_ + i] = (t[m - k_ + i] + c * red_[i]) % p_;
    }
    t.resize(k_);
    return t;
}

std::vector<std::int64_t> Field::inv_coords(const std::vector<std::int64_t>& a) const {
    bool zero = true;
    for (auto v : a)
        if (v != 0) zero = false;
    if (zero) throw InvalidInputError("division by zero field element");
    if (k_ == 1) {
        std::int64_t x = a[0], r = 1, e = p_ - 2;
        while (e > 0) {
            if (e & 1) r = r * x % p_;
            x = x * x % p_;
            e >>= 1;
        }
        return {r};
    }
    // a^(q-2)
    std::vector<std::int64_t> base = a, r(k_, 0);
    r[0] = 1;
    std::int64_t e = q_ - 2;
    while (e > 0) {
        if (e & 1) r = mul_coords(r, base);
        base = mul_coords(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement::FieldElement(const Field* field, std::vector<std::int64_t> coords)
    : field_(field), c_(std::move(coords)) {}

bool FieldElement::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    std::vector<std::int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = modp(c_[i] + o.c_[i], field_->p_);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    std::vector<std::int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = modp(c_[i] - o.c_[i], field_->p_);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<std::int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = modp(-c_[i], field_->p_);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return FieldElement(field_, field_->mul_coords(c_, o.c_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return FieldElement(field_, field_->mul_coords(c_, field_->inv_coords(o.c_)));
}

FieldElement FieldElement::inv() const { return FieldElement(field_, field_->inv_coords(c_)); }

FieldElement FieldElement::pow(std::int64_t e) const {
    if (is_zero()) {
        if (e <= 0) throw InvalidInputError("0 cannot be raised to a nonpositive power");
        return *this;
    }
    std::int64_t m = field_->q_ - 1;
    e %= m;
    if (e < 0) e += m;
    FieldElement base = *this, r = field_->one();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const { return c_ == o.c_; }

std::int64_t FieldElement::index() const {
    std::int64_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * field_->p_ + c_[i];
    return r;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    if (c_.size() == 1) {
        os << c_[0];
    } else {
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << "]";
    }
    return os.str();
}

} // namespace curvearith
