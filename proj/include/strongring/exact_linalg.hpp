#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace strongring {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix with arbitrary-precision integer entries, row major. Desk
// scale: fine up to a few thousand columns; the operator pipeline keeps big
// matrices in SparseIntMatrix and converts down here only for elimination.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMatrix transpose() const;
    Int trace() const;
    Int entry_sum() const;
    std::vector<Int> row_sums() const;
    bool is_symmetric() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
    explicit RatMatrix(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Coordinate-sparse integer matrix for operator assembly (entries of d, D, H,
// L are small). Rows hold (col, value) pairs sorted by column; no explicit
// zeros are stored.
struct SparseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> row;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), row(static_cast<std::size_t>(r)) {}

    void add(int i, int j, long long v); // accumulate, dropping zeros at the end
    void finalize();                     // sort columns, merge duplicates, drop zeros
    long long nnz() const;
    long long get(int i, int j) const;
    long long trace() const;
    long long entry_sum() const;

    SparseIntMatrix transpose() const;
    IntMatrix to_int_matrix() const;
    std::vector<double> to_dense_double() const; // row major
    bool is_symmetric() const;
    bool is_zero() const;
    double frobenius_norm() const;

    // submatrix rows [r0,r1) x cols [c0,c1)
    SparseIntMatrix block(int r0, int r1, int c0, int c1) const;
};

SparseIntMatrix sparse_add(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b);
// Serial reference kept for testing the OpenMP kernel.
SparseIntMatrix sparse_mul_serial(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Fraction-free (Bareiss) elimination with partial pivoting by magnitude.
// Exact for arbitrary-precision entries.
Int det_exact(const IntMatrix& m);
Int det_exact_serial(const IntMatrix& m);

// Exact rank over the rationals; Gaussian elimination with partial pivoting
// by magnitude.
int rank_rational(const IntMatrix& m);
int rank_rational(const RatMatrix& m);
int rank_rational(const SparseIntMatrix& m);

// Basis of the right kernel over the rationals; dimension = cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const IntMatrix& m);
std::vector<std::vector<Rat>> kernel_basis(const SparseIntMatrix& m);

// Exact integer inverse of a unimodular matrix; throws NotUnimodular
// otherwise. The product m * m^-1 is verified exactly in every call.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Exact rational inverse (square, non-singular).
RatMatrix inverse_rational(const RatMatrix& m);

// Standard Kronecker product and block-diagonal direct sum. The row index of
// kronecker(a, b) for the pair (i, j) is i * b.rows() + j (same for columns),
// matching CellBasis::kron_index.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
SparseIntMatrix kronecker(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix direct_sum(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Matrix Market coordinate integer format.
void write_matrix_market(std::ostream& os, const SparseIntMatrix& m);
void write_matrix_market(std::ostream& os, const IntMatrix& m);
SparseIntMatrix read_matrix_market(std::istream& is);

} // namespace strongring
