#include "syzstab/matrix.hpp"

namespace syzstab {

Matrix Matrix::identity(std::size_t n, std::uint64_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp(1, p);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_internal(cols_ == o.rows_, "Matrix: dimension mismatch in product");
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<Fp> Matrix::apply(const std::vector<Fp>& v) const {
    check_internal(v.size() == cols_, "Matrix: vector length mismatch");
    std::vector<Fp> out(rows_, Fp(0, p_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(pivot, j));
        Fp inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Fp c = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= c * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

KernelResult rank_and_kernel(const Matrix& m) {
    Matrix r(m);
    std::vector<std::size_t> pivots = r.rref();
    KernelResult out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Fp> v(m.cols(), Fp(0, m.modulus()));
        v[free_col] = Fp(1, m.modulus());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int rank(const Matrix& m) {
    Matrix r(m);
    return static_cast<int>(r.rref().size());
}

std::optional<std::vector<Fp>> solve(const Matrix& a, const std::vector<Fp>& b) {
    check_internal(b.size() == a.rows(), "solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    // Inconsistent iff the last column is a pivot.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Fp> x(a.cols(), Fp(0, a.modulus()));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

}  // namespace syzstab
