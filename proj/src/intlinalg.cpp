#include "curvearith/intlinalg.hpp"

#include <algorithm>

#include "curvearith/errors.hpp"

namespace curvearith {

void SparseIntMatrix::set(int r, int c, mpz_class v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidInputError("entry out of range");
    if (v == 0) return;
    for (auto& e : e_)
        if (e.row == r && e.col == c) throw InvalidInputError("duplicate sparse entry");
    e_.push_back({r, c, std::move(v)});
}

void SparseIntMatrix::append_row(const std::vector<std::pair<int, mpz_class>>& sparse_row) {
    int r = rows_++;
    for (auto& [c, v] : sparse_row)
        if (v != 0) set(r, c, v);
}

std::vector<std::vector<mpz_class>> SparseIntMatrix::dense() const {
    std::vector<std::vector<mpz_class>> d(rows_, std::vector<mpz_class>(cols_, 0));
    for (auto& e : e_) d[e.row][e.col] = e.value;
    return d;
}

namespace {

// Fraction-free (Bareiss) rank over Q.
int dense_rank(std::vector<std::vector<mpz_class>> a) {
    if (a.empty()) return 0;
    int n = static_cast<int>(a.size()), m = static_cast<int>(a[0].size());
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < m && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < n; ++r) {
            for (int c = col + 1; c < m; ++c) {
                mpz_class t = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = std::move(t);
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

int int_rank(const SparseIntMatrix& B) {
    // Structural pre-check on the sparse triples: rows/cols that carry no
    // entry cannot contribute, so eliminate them before densifying.
    std::vector<int> rmap(B.rows(), -1), cmap(B.cols(), -1);
    int nr = 0, nc = 0;
    for (auto& e : B.entries()) {
        if (rmap[e.row] < 0) rmap[e.row] = nr++;
        if (cmap[e.col] < 0) cmap[e.col] = nc++;
    }
    if (nr == 0) return 0;
    std::vector<std::vector<mpz_class>> d(nr, std::vector<mpz_class>(nc, 0));
    for (auto& e : B.entries()) d[rmap[e.row]][cmap[e.col]] = e.value;
    return dense_rank(std::move(d));
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
    std::vector<mpz_class> diag;
    if (m.empty() || m[0].empty()) return diag;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int t = 0;  // current pivot index
    while (t < rows && t < cols) {
        // pivot: smallest nonzero magnitude in the trailing block
        int pr = -1, pc = -1;
        mpz_class best;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                mpz_class a = abs(m[r][c]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // trailing block is zero
        std::swap(m[t], m[pr]);
        for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column t by row reductions
            for (int r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                mpz_class q = m[r][t] / m[t][t];  // truncated division keeps |rem| < |pivot|
                if (q != 0)
                    for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                if (m[r][t] != 0) {
                    std::swap(m[t], m[r]);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            if (!clean) continue;
            // clear row t by column reductions
            for (int c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                mpz_class q = m[t][c] / m[t][t];
                if (q != 0)
                    for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                if (m[t][c] != 0) {
                    for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every entry of the trailing block
            for (int r = t + 1; r < rows && clean; ++r)
                for (int c = t + 1; c < cols && clean; ++c) {
                    if (m[r][c] % m[t][t] != 0) {
                        for (int cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
                        clean = false;
                    }
                }
        }
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        diag.push_back(m[t][t]);
        ++t;
    }
    return diag;
}

mpz_class AbelianGroupStructure::torsion_order() const {
    mpz_class o = 1;
    for (auto& d : torsion) o *= d;
    return o;
}

AbelianGroupStructure elementary_divisors(const SparseIntMatrix& B, int ambient_cols) {
    if (B.cols() != ambient_cols)
        throw InvalidInputError("ambient column count does not match the matrix");
    AbelianGroupStructure g;
    auto diag = smith_diagonal(B.dense());
    int r = static_cast<int>(diag.size());
    g.free_rank = ambient_cols - r;
    for (auto& d : diag)
        if (d >= 2) g.torsion.push_back(d);
    return g;
}

} // namespace curvearith
