#pragma once

#include "flowvol/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowvol {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Strict weak order placing the graded-lex larger monomial first
// (higher total degree first, then lex with variable 0 > variable 1 > ...).
struct GradedLexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order and zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
/// Variables are indexed from 0; rendering names variable i as "<prefix>(i+1)".
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents& exps) const;

  // -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;

  // Accumulates c * x^exps into the polynomial.
  void add_term(const Exponents& exps, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& c) { return lhs *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly rhs) { return rhs *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.nvars_ == rhs.nvars_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_compatible(const MultiPoly& rhs, const char* op) const;

  std::size_t nvars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned n);

/// Partial derivative with respect to variable i (0-based).
MultiPoly partial(const MultiPoly& p, std::size_t i);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

// Homogeneous part of the given total degree.
MultiPoly homogeneous_part(const MultiPoly& p, unsigned degree);

// Re-indexes p into a ring with `nvars` variables, variable i going to
// variable i + offset.
MultiPoly embed(const MultiPoly& p, std::size_t nvars, std::size_t offset);

/// All exponent vectors of total degree d in n variables, graded-lex descending.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Canonical text form, e.g. "1/360*a1^6 + 1/60*a1^5*a2 - a3".
std::string to_string(const MultiPoly& p, std::string_view prefix = "a");

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace flowvol
