#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bruhat {

using Rat = mpq_class;

/// Dense exact-rational matrix. Multiplication skips zero entries, so
/// monomial action matrices multiply in O(dim^2).
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols);
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat transpose() const;
    RatMat scaled(const Rat& c) const;

    bool operator==(const RatMat& o) const = default;
    bool is_zero() const;
    bool is_identity() const;

    // Kronecker product with row-major pair indexing (i_a * rows_b + i_b).
    static RatMat kron(const RatMat& a, const RatMat& b);
    // Block diagonal sum.
    static RatMat direct_sum(const RatMat& a, const RatMat& b);

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();
    int rank() const;
    // Basis of the right nullspace (as columns stacked in a rows=cols_ matrix
    // per vector).
    std::vector<std::vector<Rat>> nullspace() const;
    // Inverse; throws std::domain_error when singular.
    RatMat inverse() const;
    bool invertible() const;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

}  // namespace bruhat
