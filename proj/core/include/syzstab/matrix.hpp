#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syzstab/fp.hpp"

namespace syzstab {

/// Dense matrix over GF(p). Row-major, exact arithmetic throughout.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, Fp(0, p)) {}

    static Matrix identity(std::size_t n, std::uint64_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    Fp& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Fp& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Fp> apply(const std::vector<Fp>& v) const;

    /// In-place reduction to reduced row echelon form with deterministic
    /// first-nonzero pivoting; returns the pivot columns in order.
    std::vector<std::size_t> rref();

private:
    std::size_t rows_, cols_;
    std::uint64_t p_;
    std::vector<Fp> a_;
};

struct KernelResult {
    int rank;
    /// Basis of the right null space; size cols - rank. Deterministic: each
    /// vector carries 1 at "its" free column and 0 at the others.
    std::vector<std::vector<Fp>> kernel;
};

KernelResult rank_and_kernel(const Matrix& m);
int rank(const Matrix& m);

/// One solution of a x = b, if any.
std::optional<std::vector<Fp>> solve(const Matrix& a, const std::vector<Fp>& b);

}  // namespace syzstab
