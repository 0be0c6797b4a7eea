#ifndef CURVEARITH_CURVE_HPP
#define CURVEARITH_CURVE_HPP

#include <memory>
#include <string>
#include <vector>

#include "curvearith/poly.hpp"

namespace curvearith {

enum class CurveFamily { Hyperelliptic, Plane };

struct PlaneMonomial {
    int ex, ey, ez;
    FieldElement c;
};

// Raw model data as parsed from a curve-spec file, before validation.
struct CurveData {
    CurveFamily family;
    std::int64_t p = 0;
    int k = 1;
    std::vector<std::vector<std::int64_t>> h, f;  // hyperelliptic coefficient lists
    struct RawMonomial {
        int ex, ey, ez;
        std::vector<std::int64_t> c;
    };
    std::vector<RawMonomial> monomials;           // plane
};

// A validated curve: either an imaginary hyperelliptic model
// y^2 + h(x) y = f(x) with deg f = 2g+1, deg h <= g (one place at infinity),
// or a smooth plane model F(X,Y,Z) = 0 of degree d with g = (d-1)(d-2)/2.
class CurveModel {
public:
    static std::shared_ptr<const CurveModel> hyperelliptic(std::shared_ptr<const Field> k,
                                                           Poly h, Poly f);
    static std::shared_ptr<const CurveModel> plane(std::shared_ptr<const Field> k,
                                                   std::vector<PlaneMonomial> F);

    CurveFamily family() const { return family_; }
    const Field& base_field() const { return *k_; }
    std::shared_ptr<const Field> base_field_ptr() const { return k_; }
    int genus() const { return genus_; }

    const Poly& h() const { return h_; }
    const Poly& f() const { return f_; }

    int plane_degree() const { return d_; }
    const std::vector<PlaneMonomial>& form() const { return F_; }

    // Minimal polynomial of y over k[x]: Phi(x, Y), ascending Y-coefficients.
    // Hyperelliptic: Y^2 + h Y - f.  Plane: F(x, Y, 1).
    const std::vector<Poly>& y_charpoly() const { return phi_; }
    int y_degree() const { return static_cast<int>(phi_.size()) - 1; }
    const Poly& y_leading() const { return phi_.back(); }

    // F with the given chart coordinate set to 1, as a bivariate in the two
    // remaining coordinates; entry [j] is the coefficient Poly (first coord)
    // of (second coord)^j.  Chart order: z -> (x, y); y -> (X/Y, Z/Y);
    // x -> (Y/X, Z/X).
    std::vector<Poly> chart_equation(int chart) const;

    std::string canonical_description() const;
    std::string hash() const;  // FNV-1a of the canonical description

private:
    CurveModel() = default;

    CurveFamily family_;
    std::shared_ptr<const Field> k_;
    int genus_ = 0;
    Poly h_, f_;
    int d_ = 0;
    std::vector<PlaneMonomial> F_;
    std::vector<Poly> phi_;
};

std::shared_ptr<const CurveModel> validate_model(const CurveData& data);

// Function-field element: (sum_j num[j](x) * y^j) / den(x) with the numerator
// reduced below deg_Y Phi, gcd(content(num), den) = 1 and den monic.  That
// normal form is unique, so equality is plain comparison.
class FunctionElement {
public:
    FunctionElement() : X_(nullptr) {}

    static FunctionElement zero(const CurveModel& X);
    static FunctionElement one(const CurveModel& X);
    static FunctionElement constant(const CurveModel& X, const FieldElement& c);
    static FunctionElement coord_x(const CurveModel& X);
    static FunctionElement coord_y(const CurveModel& X);
    static FunctionElement from_poly(const CurveModel& X, const Poly& a);
    // num[j] is the coefficient of y^j; den nonzero in k[x].
    static FunctionElement make(const CurveModel& X, std::vector<Poly> num, Poly den);

    const CurveModel& curve() const { return *X_; }
    bool is_zero() const { return num_.empty(); }
    bool is_constant() const;
    const std::vector<Poly>& num() const { return num_; }
    const Poly& den() const { return den_; }
    int y_deg() const { return static_cast<int>(num_.size()) - 1; }
    Poly num_coeff(int j) const;

    FunctionElement operator+(const FunctionElement& o) const;
    FunctionElement operator-(const FunctionElement& o) const;
    FunctionElement operator-() const;
    FunctionElement operator*(const FunctionElement& o) const;
    FunctionElement operator*(const FieldElement& s) const;
    FunctionElement operator/(const FunctionElement& o) const;
    FunctionElement inv() const;
    FunctionElement pow(int e) const;

    bool operator==(const FunctionElement& o) const;
    bool operator!=(const FunctionElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    FunctionElement(const CurveModel* X, std::vector<Poly> num, Poly den);
    void normalize();

    const CurveModel* X_;
    std::vector<Poly> num_;
    Poly den_;
};

} // namespace curvearith

#endif
