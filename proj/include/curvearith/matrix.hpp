#ifndef CURVEARITH_MATRIX_HPP
#define CURVEARITH_MATRIX_HPP

#include <optional>
#include <vector>

#include "curvearith/field.hpp"

namespace curvearith {

// Dense rectangular matrix over a Field.
class FieldMatrix {
public:
    FieldMatrix() : field_(nullptr), rows_(0), cols_(0) {}
    FieldMatrix(const Field* field, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }

    FieldElement& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldElement& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    FieldMatrix transpose() const;

private:
    const Field* field_;
    int rows_, cols_;
    std::vector<FieldElement> e_;
};

struct RankNullspace {
    int rank;
    // Reduced row echelon basis of { b : b * A = 0 }, each vector of length
    // rows(A); deterministic.
    std::vector<std::vector<FieldElement>> left_nullspace;
};

RankNullspace rank_and_left_nullspace(const FieldMatrix& A);
int rank_of(const FieldMatrix& A);

// Solve M * x = rhs for square M; throws if singular.
std::vector<FieldElement> solve_linear(const FieldMatrix& M, const std::vector<FieldElement>& rhs);

// One solution of a (possibly rectangular or singular) consistent system,
// free variables set to zero; nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve_any(const FieldMatrix& M,
                                                   const std::vector<FieldElement>& rhs);

// Incremental column-echelon state: absorbs columns one at a time and tracks
// the rank seen so far.  Copying the state snapshots the elimination after a
// shared column prefix, which is what makes divisor streams with common
// prefixes cheap to scan.
class EchelonState {
public:
    explicit EchelonState(const Field* field, int nrows) : field_(field), nrows_(nrows) {}

    int rank() const { return static_cast<int>(pivots_.size()); }
    int height() const { return nrows_; }

    // Reduce col against the pivots; if a nonzero remainder survives, keep it
    // as a new pivot and return true (rank grew).
    bool absorb(std::vector<FieldElement> col);

private:
    const Field* field_;
    int nrows_;
    std::vector<int> pivot_row_;                        // pivot position per stored vector
    std::vector<std::vector<FieldElement>> pivots_;     // normalized pivot columns
};

} // namespace curvearith

#endif
