#include "bruhat/matrix.hpp"

#include <stdexcept>

namespace bruhat {

RatMat::RatMat(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat::mul: shape mismatch");
    RatMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b == 0) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat::add: shape mismatch");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat::sub: shape mismatch");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

RatMat RatMat::transpose() const {
    RatMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

bool RatMat::is_zero() const {
    for (const Rat& v : data_)
        if (v != 0) return false;
    return true;
}

bool RatMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

RatMat RatMat::kron(const RatMat& a, const RatMat& b) {
    RatMat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l) {
                    if (b.at(k, l) == 0) continue;
                    out.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return out;
}

RatMat RatMat::direct_sum(const RatMat& a, const RatMat& b) {
    RatMat out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return out;
}

std::vector<int> RatMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rat inv = 1 / at(row, col);
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rat f = at(r, col);
            for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMat::rank() const {
    RatMat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

std::vector<std::vector<Rat>> RatMat::nullspace() const {
    RatMat tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<char> is_pivot(cols_, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -tmp.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::domain_error("RatMat::inverse: not square");
    RatMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        throw std::domain_error("RatMat::inverse: singular");
    RatMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

bool RatMat::invertible() const { return rows_ == cols_ && rank() == rows_; }

std::string RatMat::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += i ? "\n[" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += " ";
            out += at(i, j).get_str();
        }
        out += "]";
    }
    return out;
}

}  // namespace bruhat
