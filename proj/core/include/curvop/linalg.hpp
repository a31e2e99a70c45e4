#pragma once

#include "curvop/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace curvop {

/// Dense rows x cols matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RationalMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct KernelRank {
    std::size_t rank = 0;
    /// Primitive integer vectors spanning the kernel.
    std::vector<std::vector<Rational>> kernel;
};

/// Fraction-free elimination; kernel vectors satisfy M v = 0 exactly.
KernelRank kernel_rank(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// nullity(d_out) - rank(d_in) for a complex  . --d_in--> . --d_out--> .
/// Either map may have zero rows/cols. Throws NotAComplex if d_out d_in != 0.
long homology_dimension(const RationalMatrix& d_in, const RationalMatrix& d_out);

/// Same value, computed separately on the connected components of the
/// incidence graph of the two maps (much faster for block-diagonal complexes).
long homology_dimension_blocked(const RationalMatrix& d_in, const RationalMatrix& d_out);

}  // namespace curvop
