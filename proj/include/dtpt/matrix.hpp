#pragma once

#include "dtpt/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace dtpt {

// Dense matrix over Q, row-major. Sizes here are tiny (quiver dimension
// vectors, weight-lattice ranks), so no attempt at sparsity or blocking.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    RatMat(std::initializer_list<std::initializer_list<long>> rows);

    static RatMat identity(size_t n);
    static RatMat zero(size_t rows, size_t cols) { return RatMat(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool same_shape(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    RatMat transpose() const;
    Rational trace() const;

    RatMat& operator+=(const RatMat& o);
    RatMat& operator-=(const RatMat& o);
    friend RatMat operator+(RatMat l, const RatMat& r) { return l += r; }
    friend RatMat operator-(RatMat l, const RatMat& r) { return l -= r; }
    friend RatMat operator*(const RatMat& l, const RatMat& r);
    friend RatMat operator*(const Rational& c, RatMat m);
    friend bool operator==(const RatMat& l, const RatMat& r) { return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_; }
    friend bool operator!=(const RatMat& l, const RatMat& r) { return !(l == r); }

    // Elementary row access for the subspace routines.
    std::vector<Rational> row(size_t i) const;
    void set_row(size_t i, const std::vector<Rational>& r);

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

RatMat commutator(const RatMat& x, const RatMat& y);
RatMat pow(const RatMat& m, unsigned e);

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row (so the rank is the return value's size).
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

// Basis of { x : m x = 0 }, one kernel vector per row, row-reduced.
RatMat kernel_basis(const RatMat& m);

std::optional<RatMat> inverse(const RatMat& m);

// Row space of `m` as a row-reduced basis (zero rows dropped).
RatMat row_space_basis(RatMat m);

// Stacks b below a (column counts must match).
RatMat vstack(const RatMat& a, const RatMat& b);

}  // namespace dtpt
