#pragma once

#include "algebra/rational.hpp"

#include <string>
#include <vector>

namespace newforms {

// Polynomial over Z, coefficients lowest-first, no trailing zero entries.
// The zero polynomial stores an empty vector and reports degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(const Integer &v);
    static IntPoly x_power(long k); // x^k

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // Coefficient of x^i; zero outside the stored range.
    Integer coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Integer(0);
        return c_[static_cast<size_t>(i)];
    }
    const Integer &leading() const { return c_.back(); }
    const std::vector<Integer> &coeffs() const { return c_; }

    bool operator==(const IntPoly &o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly &o) const { return c_ != o.c_; }

    IntPoly operator+(const IntPoly &o) const;
    IntPoly operator-(const IntPoly &o) const;
    IntPoly operator*(const IntPoly &o) const;
    IntPoly operator-() const;
    IntPoly scaled(const Integer &s) const;

    Integer eval(const Integer &x) const;
    Rational eval(const Rational &x) const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// gcd of all coefficients, with the sign of the leading coefficient;
// content(0) = 0.
Integer content(const IntPoly &p);

// p / content(p); leading coefficient positive. pp(0) = 0.
IntPoly primitive_part(const IntPoly &p);

IntPoly derivative(const IntPoly &p);

// True and sets q with a = b*q when b divides a exactly over Z.
bool divides(const IntPoly &a, const IntPoly &b, IntPoly &q);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(const IntPoly &a, const IntPoly &b);

// Yun decomposition of a nonzero polynomial: primitive pairwise-coprime
// squarefree parts with their multiplicities, ordered by multiplicity.
// content(p) and the sign are the caller's to track.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly &p);

// Product of the distinct irreducible factors, primitive, positive leading
// coefficient.
IntPoly squarefree_part(const IntPoly &p);

// Human-readable form, e.g. "x^3 - 2*x + 1".
std::string poly_to_string(const IntPoly &p);

// Exact total degree-preserving conversions used when factoring rational
// characteristic polynomials: scale holds the rational multiplier with
// coeffs = scale * primitive integer polynomial.
IntPoly clear_denominators(const std::vector<Rational> &coeffs, Rational &scale);

} // namespace newforms
