#ifndef CURVEARITH_INTLINALG_HPP
#define CURVEARITH_INTLINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace curvearith {

// Sparse integer matrix, stored as (row, col, value) triples with distinct
// positions and nonzero values.
class SparseIntMatrix {
public:
    struct Entry {
        int row, col;
        mpz_class value;
    };

    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return e_; }

    void set(int r, int c, mpz_class v);
    void append_row(const std::vector<std::pair<int, mpz_class>>& sparse_row);

    std::vector<std::vector<mpz_class>> dense() const;

private:
    int rows_, cols_;
    std::vector<Entry> e_;
};

// Rank over the rationals (fraction-free elimination on a dense copy).
int int_rank(const SparseIntMatrix& B);

// Z^free_rank x Z/d_1 x ... x Z/d_t with 2 <= d_1 | d_2 | ... | d_t.
struct AbelianGroupStructure {
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    mpz_class torsion_order() const;
    bool operator==(const AbelianGroupStructure& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// Structure of Z^ambient_cols / rowspace(B) via the Smith normal form of B.
AbelianGroupStructure elementary_divisors(const SparseIntMatrix& B, int ambient_cols);

// Diagonal of the Smith normal form of a dense matrix (nonzero entries only,
// divisibility chain normalized).  Exposed for the test oracle.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> M);

} // namespace curvearith

#endif
