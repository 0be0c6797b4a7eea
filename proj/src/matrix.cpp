#include "curvearith/matrix.hpp"

#include "curvearith/counters.hpp"
#include "curvearith/errors.hpp"

namespace curvearith {

FieldMatrix::FieldMatrix(const Field* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, field->zero()) {}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RankNullspace rank_and_left_nullspace(const FieldMatrix& A) {
    OpCounters::global().rank_queries.fetch_add(1, std::memory_order_relaxed);
    const Field& F = A.field();
    int n = A.rows(), m = A.cols();
    // Row-reduce [A | I]; rows whose A-part vanishes carry nullspace vectors
    // in the I-part.
    int width = m + n;
    std::vector<std::vector<FieldElement>> w(n, std::vector<FieldElement>(width, F.zero()));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) w[r][c] = A.at(r, c);
        w[r][m + r] = F.one();
    }
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!w[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        FieldElement inv = w[rank][col].inv();
        for (int c = col; c < width; ++c) w[rank][c] = w[rank][c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || w[r][col].is_zero()) continue;
            FieldElement f = w[r][col];
            for (int c = col; c < width; ++c) w[r][c] = w[r][c] - f * w[rank][c];
        }
        ++rank;
    }
    RankNullspace out;
    out.rank = rank;
    // Rows rank..n-1 have zero A-part; their I-parts span the left nullspace.
    // Re-reduce those vectors so the basis is in reduced echelon form.
    std::vector<std::vector<FieldElement>> ns;
    for (int r = rank; r < n; ++r)
        ns.emplace_back(w[r].begin() + m, w[r].end());
    int nr = static_cast<int>(ns.size());
    int lead = 0;
    for (int col = 0; col < n && lead < nr; ++col) {
        int piv = -1;
        for (int r = lead; r < nr; ++r)
            if (!ns[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(ns[lead], ns[piv]);
        FieldElement inv = ns[lead][col].inv();
        for (int c = 0; c < n; ++c) ns[lead][c] = ns[lead][c] * inv;
        for (int r = 0; r < nr; ++r) {
            if (r == lead || ns[r][col].is_zero()) continue;
            FieldElement f = ns[r][col];
            for (int c = 0; c < n; ++c) ns[r][c] = ns[r][c] - f * ns[lead][c];
        }
        ++lead;
    }
    out.left_nullspace = std::move(ns);
    return out;
}

int rank_of(const FieldMatrix& A) {
    OpCounters::global().rank_queries.fetch_add(1, std::memory_order_relaxed);
    const Field& F = A.field();
    EchelonState st(&F, A.rows());
    for (int c = 0; c < A.cols(); ++c) {
        std::vector<FieldElement> col;
        col.reserve(A.rows());
        for (int r = 0; r < A.rows(); ++r) col.push_back(A.at(r, c));
        st.absorb(std::move(col));
    }
    return st.rank();
}

std::vector<FieldElement> solve_linear(const FieldMatrix& M, const std::vector<FieldElement>& rhs) {
    const Field& F = M.field();
    int n = M.rows();
    if (M.cols() != n || static_cast<int>(rhs.size()) != n)
        throw InvalidInputError("solve_linear needs a square system");
    std::vector<std::vector<FieldElement>> w(n, std::vector<FieldElement>(n + 1, F.zero()));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w[r][c] = M.at(r, c);
        w[r][n] = rhs[r];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!w[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw InvalidInputError("singular linear system");
        std::swap(w[col], w[piv]);
        FieldElement inv = w[col][col].inv();
        for (int c = col; c <= n; ++c) w[col][c] = w[col][c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || w[r][col].is_zero()) continue;
            FieldElement f = w[r][col];
            for (int c = col; c <= n; ++c) w[r][c] = w[r][c] - f * w[col][c];
        }
    }
    std::vector<FieldElement> x;
    x.reserve(n);
    for (int r = 0; r < n; ++r) x.push_back(w[r][n]);
    return x;
}

std::optional<std::vector<FieldElement>> solve_any(const FieldMatrix& M,
                                                   const std::vector<FieldElement>& rhs) {
    const Field& F = M.field();
    int n = M.rows(), m = M.cols();
    std::vector<std::vector<FieldElement>> w(n, std::vector<FieldElement>(m + 1, F.zero()));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) w[r][c] = M.at(r, c);
        w[r][m] = rhs[r];
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!w[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        FieldElement inv = w[rank][col].inv();
        for (int c = col; c <= m; ++c) w[rank][c] = w[rank][c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || w[r][col].is_zero()) continue;
            FieldElement f = w[r][col];
            for (int c = col; c <= m; ++c) w[r][c] = w[r][c] - f * w[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (!w[r][m].is_zero()) return std::nullopt;
    std::vector<FieldElement> x(m, F.zero());
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = w[i][m];
    return x;
}

bool EchelonState::absorb(std::vector<FieldElement> col) {
    for (size_t i = 0; i < pivots_.size(); ++i) {
        const FieldElement& c = col[pivot_row_[i]];
        if (c.is_zero()) continue;
        for (int r = 0; r < nrows_; ++r) col[r] = col[r] - c * pivots_[i][r];
    }
    int lead = -1;
    for (int r = 0; r < nrows_; ++r)
        if (!col[r].is_zero()) {
            lead = r;
            break;
        }
    if (lead < 0) return false;
    FieldElement inv = col[lead].inv();
    for (int r = 0; r < nrows_; ++r) col[r] = col[r] * inv;
    pivot_row_.push_back(lead);
    pivots_.push_back(std::move(col));
    return true;
}

} // namespace curvearith
