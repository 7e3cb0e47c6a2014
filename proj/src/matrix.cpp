#include "dtpt/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace dtpt {

RatMat::RatMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

RatMat RatMat::identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RatMat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rational t(0);
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

RatMat& RatMat::operator+=(const RatMat& o) {
    if (!same_shape(o)) throw std::invalid_argument("shape mismatch in +");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
    if (!same_shape(o)) throw std::invalid_argument("shape mismatch in -");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

RatMat operator*(const RatMat& l, const RatMat& r) {
    if (l.cols_ != r.rows_) throw std::invalid_argument("shape mismatch in *");
    RatMat p(l.rows_, r.cols_);
    for (size_t i = 0; i < l.rows_; ++i)
        for (size_t k = 0; k < l.cols_; ++k) {
            const Rational& lik = l(i, k);
            if (lik == 0) continue;
            for (size_t j = 0; j < r.cols_; ++j) p(i, j) += lik * r(k, j);
        }
    return p;
}

RatMat operator*(const Rational& c, RatMat m) {
    for (auto& v : m.data_) v *= c;
    return m;
}

std::vector<Rational> RatMat::row(size_t i) const {
    return std::vector<Rational>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void RatMat::set_row(size_t i, const std::vector<Rational>& r) {
    assert(r.size() == cols_);
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
}

RatMat commutator(const RatMat& x, const RatMat& y) { return x * y - y * x; }

RatMat pow(const RatMat& m, unsigned e) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pow of non-square matrix");
    RatMat acc = RatMat::identity(m.rows());
    for (unsigned k = 0; k < e; ++k) acc = acc * m;
    return acc;
}

std::vector<size_t> rref(RatMat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(RatMat m) { return rref(m).size(); }

RatMat kernel_basis(const RatMat& m) {
    RatMat red = m;
    std::vector<size_t> pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    size_t dim = m.cols() - pivots.size();
    RatMat basis(dim, m.cols());
    size_t k = 0;
    for (size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        basis(k, free_c) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) basis(k, pivots[r]) = -red(r, free_c);
        ++k;
    }
    rref(basis);
    return basis;
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<size_t> pivots = rref(aug);
    // all n pivots must land in the left block
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    RatMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatMat row_space_basis(RatMat m) {
    std::vector<size_t> pivots = rref(m);
    RatMat out(pivots.size(), m.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

RatMat vstack(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("vstack column mismatch");
    size_t cols = a.rows() == 0 ? b.cols() : a.cols();
    RatMat out(a.rows() + b.rows(), cols);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

}  // namespace dtpt
