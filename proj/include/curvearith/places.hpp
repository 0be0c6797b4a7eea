#ifndef CURVEARITH_PLACES_HPP
#define CURVEARITH_PLACES_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curvearith/curve.hpp"
#include "curvearith/residue_field.hpp"

namespace curvearith {

struct LocalCtx;

// A closed point of the curve.  Hyperelliptic places live over a monic
// irreducible pi(x) of the x-line (split / inert / ramified) or at the single
// point at infinity of the imaginary model.  Plane places are Frobenius
// orbits of projective points, kept as one representative over F_{q^e}.
class Place {
public:
    enum class Kind {
        FiniteSplit,
        FiniteInert,
        FiniteRamified,
        HyperInfinity,
        PlaneAffine,
        PlaneAtInfinity,
    };

    ~Place();

    const CurveModel& curve() const { return *X_; }
    Kind kind() const { return kind_; }
    int degree() const { return degree_; }

    // True when x = X/Z has a pole here, i.e. the place lies over the
    // infinite base point of the x-line.
    bool over_infinity() const;
    // Base point of P^1 under the x-map: pi(x) for finite places (the minimal
    // polynomial of x's value); meaningless when over_infinity().
    const Poly& base_point() const { return base_; }
    // Split/ramified hyperelliptic: v(x) with y = v(x) mod pi.
    const Poly& y_datum() const { return ydatum_; }

    const ResidueField& residue_field() const { return *rf_; }
    const FunctionElement& uniformizer() const { return uniformizer_; }
    // Lifts of the residue-field basis to functions (powers of the primitive
    // coordinate, tensored with y for inert hyperelliptic places).
    const std::vector<FunctionElement>& residue_lifts() const { return lifts_; }

    int chart() const { return chart_; }               // plane: 0=x, 1=y, 2=z
    const FieldElement& rep_first() const { return rep_[0]; }
    const FieldElement& rep_second() const { return rep_[1]; }
    std::shared_ptr<const Field> point_field() const { return E_; }

    // Deterministic total order: (degree, infinite-last, base point, branch key).
    std::vector<std::int64_t> order_key() const;
    std::string id() const;

    LocalCtx& local() const { return *local_; }

private:
    Place() = default;
    friend struct PlaceBuilder;

    const CurveModel* X_ = nullptr;
    Kind kind_;
    int degree_ = 0;
    Poly base_, ydatum_;
    std::shared_ptr<const ResidueField> rf_;
    FunctionElement uniformizer_;
    std::vector<FunctionElement> lifts_;
    int chart_ = 2;
    std::array<FieldElement, 2> rep_;
    std::shared_ptr<const Field> E_;
    FunctionElement theta_function_;
    std::unique_ptr<LocalCtx> local_;
};

using PlacePtr = std::shared_ptr<const Place>;

bool place_less(const PlacePtr& a, const PlacePtr& b);
bool place_same(const Place& a, const Place& b);

// All places of degree <= m, each once, in the deterministic order.
std::vector<PlacePtr> places_up_to(const std::shared_ptr<const CurveModel>& X, int m);

// |X(F_{q^e})| by exhaustive enumeration (points at infinity included).
std::int64_t count_points(const CurveModel& X, int e, std::int64_t budget = 10000000);

// Valuation of f at x; exact (series precision raised until resolved, with a
// degree-based certificate bounding the search).
int valuation_at(const FunctionElement& f, const Place& x);

// Residue class of f in k(x); PoleError when v_x(f) < 0.
RFElem evaluate_at(const FunctionElement& f, const Place& x);

// Uniformizer construction from coordinate minimal polynomials; the infinite
// hyperelliptic place uses x^g/y.
FunctionElement uniformizer_at(const CurveModel& X, const Place& x);

// Effective or general divisor with support in a fixed place universe.
class Divisor {
public:
    Divisor() = default;

    void add(const PlacePtr& x, int mult);
    int multiplicity(const Place& x) const;
    const std::vector<std::pair<PlacePtr, int>>& terms() const { return t_; }
    int degree() const;
    bool is_effective() const;
    bool empty() const { return t_.empty(); }

    static Divisor single(const PlacePtr& x, int mult);

private:
    std::vector<std::pair<PlacePtr, int>> t_;  // sorted, nonzero multiplicities
};

} // namespace curvearith

#endif
