#include "strongring/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "strongring/errors.hpp"
#include "strongring/runtime.hpp"

namespace strongring {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int IntMatrix::trace() const {
    Int s = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
    return s;
}

Int IntMatrix::entry_sum() const {
    Int s = 0;
    for (const auto& x : a_) s += x;
    return s;
}

std::vector<Int> IntMatrix::row_sums() const {
    std::vector<Int> v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) v[static_cast<std::size_t>(i)] += at(i, j);
    return v;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw BadParameter("matmul: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) at(i, j) = Rat(m.at(i, j));
}

void SparseIntMatrix::add(int i, int j, long long v) {
    if (v == 0) return;
    row[static_cast<std::size_t>(i)].emplace_back(j, v);
}

void SparseIntMatrix::finalize() {
    for (auto& r : row) {
        std::sort(r.begin(), r.end());
        std::vector<std::pair<int, long long>> merged;
        for (const auto& [j, v] : r) {
            if (!merged.empty() && merged.back().first == j) merged.back().second += v;
            else merged.emplace_back(j, v);
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        r = std::move(merged);
    }
}

long long SparseIntMatrix::nnz() const {
    long long n = 0;
    for (const auto& r : row) n += static_cast<long long>(r.size());
    return n;
}

long long SparseIntMatrix::get(int i, int j) const {
    for (const auto& [c, v] : row[static_cast<std::size_t>(i)])
        if (c == j) return v;
    return 0;
}

long long SparseIntMatrix::trace() const {
    long long t = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) t += get(i, i);
    return t;
}

long long SparseIntMatrix::entry_sum() const {
    long long s = 0;
    for (const auto& r : row)
        for (const auto& [c, v] : r) s += v;
    return s;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : row[static_cast<std::size_t>(i)]) t.row[static_cast<std::size_t>(j)].emplace_back(i, v);
    t.finalize();
    return t;
}

IntMatrix SparseIntMatrix::to_int_matrix() const {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : row[static_cast<std::size_t>(i)]) m.at(i, j) = static_cast<long>(v);
    return m;
}

std::vector<double> SparseIntMatrix::to_dense_double() const {
    std::vector<double> m(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : row[static_cast<std::size_t>(i)])
            m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)] = static_cast<double>(v);
    return m;
}

bool SparseIntMatrix::is_symmetric() const {
    if (rows != cols) return false;
    SparseIntMatrix t = transpose();
    for (int i = 0; i < rows; ++i)
        if (row[static_cast<std::size_t>(i)] != t.row[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool SparseIntMatrix::is_zero() const {
    for (const auto& r : row)
        if (!r.empty()) return false;
    return true;
}

double SparseIntMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto& r : row)
        for (const auto& [j, v] : r) s += static_cast<double>(v) * static_cast<double>(v);
    return std::sqrt(s);
}

SparseIntMatrix SparseIntMatrix::block(int r0, int r1, int c0, int c1) const {
    SparseIntMatrix b(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (const auto& [j, v] : row[static_cast<std::size_t>(i)])
            if (j >= c0 && j < c1) b.row[static_cast<std::size_t>(i - r0)].emplace_back(j - c0, v);
    return b;
}

SparseIntMatrix sparse_add(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw BadParameter("sparse_add: shape mismatch");
    SparseIntMatrix c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        c.row[static_cast<std::size_t>(i)] = a.row[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : b.row[static_cast<std::size_t>(i)]) c.row[static_cast<std::size_t>(i)].emplace_back(j, v);
    }
    c.finalize();
    return c;
}

namespace {
void mul_row(const SparseIntMatrix& a, const SparseIntMatrix& b, int i,
             std::vector<long long>& acc, std::vector<int>& touched,
             std::vector<std::pair<int, long long>>& out) {
    touched.clear();
    for (const auto& [k, av] : a.row[static_cast<std::size_t>(i)]) {
        for (const auto& [j, bv] : b.row[static_cast<std::size_t>(k)]) {
            if (acc[static_cast<std::size_t>(j)] == 0) touched.push_back(j);
            acc[static_cast<std::size_t>(j)] += av * bv;
        }
    }
    std::sort(touched.begin(), touched.end());
    out.clear();
    for (int j : touched) {
        if (acc[static_cast<std::size_t>(j)] != 0) out.emplace_back(j, acc[static_cast<std::size_t>(j)]);
        acc[static_cast<std::size_t>(j)] = 0;
    }
}
} // namespace

SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw BadParameter("sparse_mul: inner dimensions differ");
    SparseIntMatrix c(a.rows, b.cols);
#pragma omp parallel num_threads(max_threads())
    {
        std::vector<long long> acc(static_cast<std::size_t>(b.cols), 0);
        std::vector<int> touched;
#pragma omp for schedule(dynamic, 64)
        for (int i = 0; i < a.rows; ++i)
            mul_row(a, b, i, acc, touched, c.row[static_cast<std::size_t>(i)]);
    }
    return c;
}

SparseIntMatrix sparse_mul_serial(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw BadParameter("sparse_mul: inner dimensions differ");
    SparseIntMatrix c(a.rows, b.cols);
    std::vector<long long> acc(static_cast<std::size_t>(b.cols), 0);
    std::vector<int> touched;
    for (int i = 0; i < a.rows; ++i)
        mul_row(a, b, i, acc, touched, c.row[static_cast<std::size_t>(i)]);
    return c;
}

namespace {

// One Bareiss elimination pass; the row updates of each step are the
// data-parallel kernel. Results are exact integers, so the outcome is
// independent of the schedule. The update uses one reused scratch limb
// buffer per thread; without it, GMP temporaries serialize on the allocator.
Int bareiss(IntMatrix m, bool parallel) {
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        // partial pivoting by magnitude
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            if (piv < 0 || mpz_cmpabs(m.at(i, k).get_mpz_t(), m.at(piv, k).get_mpz_t()) > 0) piv = i;
        }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = k; j < n; ++j) swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        const Int pivot = m.at(k, k);
#pragma omp parallel num_threads(max_threads()) if (parallel && n - k > 16)
        {
            Int t;
#pragma omp for schedule(static)
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    // t = m(i,j) * pivot - m(i,k) * m(k,j), then exact division
                    mpz_mul(t.get_mpz_t(), m.at(i, j).get_mpz_t(), pivot.get_mpz_t());
                    mpz_submul(t.get_mpz_t(), m.at(i, k).get_mpz_t(), m.at(k, j).get_mpz_t());
                    mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                m.at(i, k) = 0;
            }
        }
        prev = pivot;
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

} // namespace

Int det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det_exact requires a square matrix");
    return bareiss(m, true);
}

Int det_exact_serial(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det_exact requires a square matrix");
    return bareiss(m, false);
}

namespace {

// Reduced row echelon form over Q. Returns the pivot column of each row used
// (size = rank).
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            if (piv < 0 || abs(m.at(i, c)) > abs(m.at(piv, c))) piv = i;
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) swap(m.at(r, j), m.at(piv, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (m.rows() > 64)
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank_rational(const RatMatrix& m) {
    RatMatrix w = m;
    return static_cast<int>(rref(w).size());
}

int rank_rational(const IntMatrix& m) { return rank_rational(RatMatrix(m)); }
int rank_rational(const SparseIntMatrix& m) { return rank_rational(RatMatrix(m.to_int_matrix())); }

std::vector<std::vector<Rat>> kernel_basis(const IntMatrix& m) {
    RatMatrix w(m);
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -w.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rat>> kernel_basis(const SparseIntMatrix& m) {
    return kernel_basis(m.to_int_matrix());
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("inverse_unimodular requires a square matrix");
    Int det = det_exact(m);
    if (det != 1 && det != -1)
        throw NotUnimodular("matrix is not unimodular", det.get_str());
    RatMatrix inv = inverse_rational(RatMatrix(m));
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = inv.at(i, j);
            if (q.get_den() != 1)
                throw NotUnimodular("inverse has a non-integer entry", det.get_str());
            out.at(i, j) = q.get_num();
        }
    // Exact verification of the product, every call.
    if (!(matmul(m, out) == IntMatrix::identity(m.rows())))
        throw Error("inverse verification failed (internal)");
    return out;
}

RatMatrix inverse_rational(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("inverse requires a square matrix");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw NotUnimodular("matrix is singular", "0");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return c;
}

SparseIntMatrix kronecker(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    SparseIntMatrix c(a.rows * b.rows, a.cols * b.cols);
#pragma omp parallel for schedule(dynamic, 16) num_threads(max_threads())
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < b.rows; ++k) {
            auto& out = c.row[static_cast<std::size_t>(i) * static_cast<std::size_t>(b.rows) + static_cast<std::size_t>(k)];
            for (const auto& [j, av] : a.row[static_cast<std::size_t>(i)])
                for (const auto& [l, bv] : b.row[static_cast<std::size_t>(k)])
                    out.emplace_back(j * b.cols + l, av * bv);
            std::sort(out.begin(), out.end());
        }
    return c;
}

SparseIntMatrix direct_sum(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    SparseIntMatrix c(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) c.row[static_cast<std::size_t>(i)] = a.row[static_cast<std::size_t>(i)];
    for (int i = 0; i < b.rows; ++i) {
        auto& out = c.row[static_cast<std::size_t>(a.rows + i)];
        for (const auto& [j, v] : b.row[static_cast<std::size_t>(i)]) out.emplace_back(a.cols + j, v);
    }
    return c;
}

void write_matrix_market(std::ostream& os, const SparseIntMatrix& m) {
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << m.rows << " " << m.cols << " " << m.nnz() << "\n";
    for (int i = 0; i < m.rows; ++i)
        for (const auto& [j, v] : m.row[static_cast<std::size_t>(i)])
            os << (i + 1) << " " << (j + 1) << " " << v << "\n";
}

void write_matrix_market(std::ostream& os, const IntMatrix& m) {
    long long nnz = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) ++nnz;
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << m.rows() << " " << m.cols() << " " << nnz << "\n";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0)
                os << (i + 1) << " " << (j + 1) << " " << m.at(i, j).get_str() << "\n";
}

SparseIntMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw BadParameter("not a Matrix Market file");
    do {
        if (!std::getline(is, line)) throw BadParameter("truncated Matrix Market file");
    } while (!line.empty() && line[0] == '%');
    std::istringstream head(line);
    int rows = 0, cols = 0;
    long long nnz = 0;
    head >> rows >> cols >> nnz;
    SparseIntMatrix m(rows, cols);
    for (long long k = 0; k < nnz; ++k) {
        int i = 0, j = 0;
        long long v = 0;
        is >> i >> j >> v;
        if (!is) throw BadParameter("truncated Matrix Market file");
        m.add(i - 1, j - 1, v);
    }
    m.finalize();
    return m;
}

} // namespace strongring
