#pragma once

#include "algebra/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace newforms {

// Dense matrix over Q, row-major. Sized for desk-scale exact computations
// (hundreds of rows); all arithmetic is exact.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational &at(long r, long c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational &at(long r, long c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const RationalMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RationalMatrix &o) const { return !(*this == o); }

    RationalMatrix operator*(const RationalMatrix &o) const;
    RationalMatrix operator+(const RationalMatrix &o) const;
    RationalMatrix operator-(const RationalMatrix &o) const;
    RationalMatrix scaled(const Rational &s) const;
    RationalMatrix transposed() const;

    bool is_zero() const;

    // Columns of `o` appended on the right (rows must agree).
    RationalMatrix augmented_cols(const RationalMatrix &o) const;
    // Rows of `o` appended below (cols must agree).
    RationalMatrix stacked_rows(const RationalMatrix &o) const;

  private:
    long rows_, cols_;
    std::vector<Rational> e_;
};

// In-place reduced row echelon form; returns the pivot column indices in order.
std::vector<long> rref_in_place(RationalMatrix &m);

// Reduced row echelon form plus pivot columns, input untouched.
std::pair<RationalMatrix, std::vector<long>> rref(const RationalMatrix &m);

long rank(const RationalMatrix &m);

// Basis of the right kernel {v : m v = 0}; one column per basis vector.
// A full-rank map yields a 0-column result.
RationalMatrix kernel(const RationalMatrix &m);

// Characteristic polynomial det(xI - m), monic, coefficients lowest-first
// (size rows+1). Fraction-free Berkowitz below the CRT threshold, multi-prime
// CRT with a Hadamard-style coefficient bound above it.
std::vector<Rational> charpoly(const RationalMatrix &m);

// Evaluate a polynomial (lowest-first coefficients) at the matrix m.
RationalMatrix poly_at_matrix(const std::vector<Rational> &coeffs, const RationalMatrix &m);

} // namespace newforms
