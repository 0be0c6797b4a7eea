#include "curvearith/residue_field.hpp"

#include "curvearith/errors.hpp"
#include "curvearith/factor.hpp"

namespace curvearith {

ResidueField::ResidueField(std::shared_ptr<const Field> base, Poly pi,
                           std::optional<InertQuadratic> quad)
    : kind_(quad ? Kind::Pair : Kind::Simple), base_(std::move(base)), pi_(std::move(pi)) {
    if (!is_irreducible(pi_)) throw InvalidInputError("residue field modulus must be irreducible");
    pi_ = pi_.monic();
    deg_ = pi_.degree() * (quad ? 2 : 1);
    if (quad) {
        hbar_ = mod(quad->hbar, pi_);
        fbar_ = mod(quad->fbar, pi_);
    }
}

ResidueField::ResidueField(std::shared_ptr<const Field> base,
                           std::shared_ptr<const Field> realization, FieldElement theta)
    : kind_(Kind::PointField), base_(std::move(base)), E_(std::move(realization)),
      theta_(std::move(theta)) {
    if (base_->degree() != 1)
        throw InvalidInputError("point residue fields require a prime base field");
    deg_ = E_->degree();
    // from_coord: columns are E-coordinates of theta^j.
    from_coord_ = FieldMatrix(base_.get(), deg_, deg_);
    FieldElement pw = E_->one();
    for (int j = 0; j < deg_; ++j) {
        for (int i = 0; i < deg_; ++i) from_coord_.at(i, j) = base_->from_int(pw.coords()[i]);
        pw = pw * theta_;
    }
    // Invert by solving against unit vectors; fails iff theta does not
    // generate E, which callers must rule out.
    to_coord_ = FieldMatrix(base_.get(), deg_, deg_);
    for (int j = 0; j < deg_; ++j) {
        std::vector<FieldElement> rhs(deg_, base_->zero());
        rhs[j] = base_->one();
        std::vector<FieldElement> col = solve_linear(from_coord_, rhs);
        for (int i = 0; i < deg_; ++i) to_coord_.at(i, j) = col[i];
    }
}

FieldElement ResidueField::to_E(const RFElem& x) const {
    std::vector<std::int64_t> c(deg_, 0);
    for (int i = 0; i < deg_ && i <= x.a.degree(); ++i) c[i] = x.a.coeff(i).index();
    return E_->from_coords(std::move(c));
}

RFElem ResidueField::zero() const { return {Poly(base_.get()), Poly(base_.get())}; }

RFElem ResidueField::one() const { return {Poly::one(*base_), Poly(base_.get())}; }

RFElem ResidueField::from_base(const FieldElement& c) const {
    return {Poly::constant(c), Poly(base_.get())};
}

RFElem ResidueField::from_poly(const Poly& a) const {
    if (kind_ == Kind::PointField) throw InternalError("from_poly on a point residue field");
    return {mod(a, pi_), Poly(base_.get())};
}

RFElem ResidueField::from_pair(const Poly& a, const Poly& b) const {
    if (kind_ != Kind::Pair) throw InternalError("from_pair on a non-inert residue field");
    return {mod(a, pi_), mod(b, pi_)};
}

RFElem ResidueField::from_realization(const FieldElement& v) const {
    if (kind_ != Kind::PointField) throw InternalError("from_realization needs a point residue field");
    std::vector<FieldElement> c;
    c.reserve(deg_);
    for (auto x : v.coords()) c.push_back(base_->from_int(x));
    return {Poly(base_.get(), std::move(c)), Poly(base_.get())};
}

RFElem ResidueField::xbar() const {
    if (kind_ == Kind::PointField) throw InternalError("xbar on a point residue field");
    return {mod(Poly::x(*base_), pi_), Poly(base_.get())};
}

RFElem ResidueField::ybar() const {
    if (kind_ != Kind::Pair) throw InternalError("ybar needs an inert residue field");
    return {Poly(base_.get()), Poly::one(*base_)};
}

RFElem ResidueField::basis_element(int l) const {
    std::vector<FieldElement> coords(deg_, base_->zero());
    coords[l] = base_->one();
    return from_phi(coords);
}

bool ResidueField::is_zero(const RFElem& x) const { return x.a.is_zero() && x.b.is_zero(); }

bool ResidueField::eq(const RFElem& x, const RFElem& y) const {
    return x.a == y.a && x.b == y.b;
}

RFElem ResidueField::add(const RFElem& x, const RFElem& y) const {
    return {x.a + y.a, x.b + y.b};
}

RFElem ResidueField::sub(const RFElem& x, const RFElem& y) const {
    return {x.a - y.a, x.b - y.b};
}

RFElem ResidueField::neg(const RFElem& x) const { return {-x.a, -x.b}; }

RFElem ResidueField::mul(const RFElem& x, const RFElem& y) const {
    switch (kind_) {
        case Kind::Simple:
            return {mod(x.a * y.a, pi_), Poly(base_.get())};
        case Kind::Pair: {
            // (a1 + b1 y)(a2 + b2 y) with y^2 = fbar - hbar*y
            Poly bb = mod(x.b * y.b, pi_);
            Poly a = mod(x.a * y.a + bb * fbar_, pi_);
            Poly b = mod(x.a * y.b + x.b * y.a - bb * hbar_, pi_);
            return {std::move(a), std::move(b)};
        }
        case Kind::PointField: {
            FieldElement v = to_E(x) * to_E(y);
            return from_realization(v);
        }
    }
    throw InternalError("unreachable");
}

RFElem ResidueField::mul_base(const RFElem& x, const FieldElement& c) const {
    return {x.a * c, x.b * c};
}

RFElem ResidueField::inv(const RFElem& x) const {
    if (is_zero(x)) throw InvalidInputError("residue field division by zero");
    switch (kind_) {
        case Kind::Simple:
            return {inv_mod(x.a, pi_), Poly(base_.get())};
        case Kind::Pair: {
            // conj = (a - b*hbar) - b*y; x * conj = a^2 - a b hbar - b^2 fbar
            Poly norm = mod(x.a * x.a - x.a * x.b * hbar_ - x.b * x.b * fbar_, pi_);
            Poly ninv = inv_mod(norm, pi_);
            return {mod((x.a - x.b * hbar_) * ninv, pi_), mod(-x.b * ninv, pi_)};
        }
        case Kind::PointField:
            return from_realization(to_E(x).inv());
    }
    throw InternalError("unreachable");
}

RFElem ResidueField::pow(const RFElem& x, std::int64_t e) const {
    RFElem base = x, r = one();
    if (e < 0) {
        base = inv(base);
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<FieldElement> ResidueField::phi(const RFElem& x) const {
    std::vector<FieldElement> out(deg_, base_->zero());
    if (kind_ == Kind::PointField) {
        for (int i = 0; i < deg_; ++i) {
            FieldElement s = base_->zero();
            for (int j = 0; j < deg_; ++j) s = s + to_coord_.at(i, j) * x.a.coeff(j);
            out[i] = s;
        }
        return out;
    }
    int n = pi_.degree();
    for (int i = 0; i < n && i <= x.a.degree(); ++i) out[i] = x.a.coeff(i);
    if (kind_ == Kind::Pair)
        for (int i = 0; i < n && i <= x.b.degree(); ++i) out[n + i] = x.b.coeff(i);
    return out;
}

RFElem ResidueField::from_phi(const std::vector<FieldElement>& coords) const {
    if (static_cast<int>(coords.size()) != deg_) throw InternalError("phi coordinate size mismatch");
    if (kind_ == Kind::PointField) {
        std::vector<FieldElement> ec(deg_, base_->zero());
        for (int i = 0; i < deg_; ++i) {
            FieldElement s = base_->zero();
            for (int j = 0; j < deg_; ++j) s = s + from_coord_.at(i, j) * coords[j];
            ec[i] = s;
        }
        return {Poly(base_.get(), std::move(ec)), Poly(base_.get())};
    }
    int n = pi_.degree();
    std::vector<FieldElement> a(coords.begin(), coords.begin() + n);
    if (kind_ == Kind::Simple) return {Poly(base_.get(), std::move(a)), Poly(base_.get())};
    std::vector<FieldElement> b(coords.begin() + n, coords.end());
    return {Poly(base_.get(), std::move(a)), Poly(base_.get(), std::move(b))};
}

Poly ResidueField::min_poly(const RFElem& x) const {
    // Rows are phi(x^j); the first dependency gives the minimal polynomial.
    std::vector<RFElem> pows{one()};
    for (int j = 1; j <= deg_; ++j) pows.push_back(mul(pows.back(), x));
    for (int j = 1; j <= deg_; ++j) {
        FieldMatrix M(base_.get(), j + 1, deg_);
        for (int r = 0; r <= j; ++r) {
            auto v = phi(pows[r]);
            for (int c = 0; c < deg_; ++c) M.at(r, c) = v[c];
        }
        auto rn = rank_and_left_nullspace(M);
        if (rn.rank == j) {
            // one nullspace vector (c_0..c_j) with c_j != 0
            const auto& v = rn.left_nullspace.at(0);
            FieldElement lead = v[j];
            if (lead.is_zero()) throw InternalError("minimal polynomial pivot vanished");
            std::vector<FieldElement> coeffs;
            coeffs.reserve(j + 1);
            FieldElement inv = lead.inv();
            for (int i = 0; i <= j; ++i) coeffs.push_back(v[i] * inv);
            return Poly(base_.get(), std::move(coeffs));
        }
    }
    throw InternalError("minimal polynomial search failed");
}

std::vector<std::int64_t> ResidueField::order_key(const RFElem& x) const {
    std::vector<std::int64_t> key;
    for (auto& c : phi(x)) key.push_back(c.index());
    return key;
}

ResidueField make_residue_field(std::shared_ptr<const Field> base, const Poly& pi,
                                std::optional<InertQuadratic> quad) {
    return ResidueField(std::move(base), pi, std::move(quad));
}

} // namespace curvearith
