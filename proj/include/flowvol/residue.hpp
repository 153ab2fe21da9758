#pragma once

#include "flowvol/multiplicity.hpp"
#include "flowvol/multipoly.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowvol {

class ResidueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// exp(a_1 x_1 + ... + a_r x_r) / (prod_i x_i^{m(i,r)} prod_{i<j<r} (x_i - x_j)^{m(i,j)}).
struct ResidueKernel {
  MultiplicityMatrix m;
};

ResidueKernel build_kernel(const MultiplicityMatrix& m);

// "exp(a1*x1 + a2*x2)/(x1*x2*(x1 - x2)^2)"
std::string to_string(const ResidueKernel& kernel);

/// A function of x_1..x_n of the form
///
///   N(a, x) * exp(sum_{i in E} a_i x_i) / prod_{i<j} (x_i - x_j)^{f(i,j)}
///
/// where N is a Laurent polynomial in the x variables with coefficients in
/// Q[a]. Powers of x_i in the denominator live in the numerator as negative
/// exponents, so cancellation against monomials is automatic. Variables
/// that have been integrated out are "dead": they carry no exponent, no
/// exponential and no root factor.
class ResidueExpr {
 public:
  using XExponents = std::vector<int>;
  using Numerator = std::map<XExponents, MultiPoly>;

  // `nx` x variables, coefficients in `na` a variables; numerator starts at 0.
  ResidueExpr(std::size_t nx, std::size_t na);

  static ResidueExpr from_kernel(const ResidueKernel& kernel);

  std::size_t nx() const { return alive_.size(); }
  std::size_t na() const { return na_; }
  bool alive(std::size_t var) const { return alive_.at(var); }
  std::size_t alive_count() const;

  bool has_exp(std::size_t var) const { return exp_.at(var); }
  void set_exp(std::size_t var, bool on);

  int root_factor(std::size_t i, std::size_t j) const;
  void set_root_factor(std::size_t i, std::size_t j, int power);
  const std::map<std::pair<std::size_t, std::size_t>, int>& root_factors() const { return roots_; }

  const Numerator& numerator() const { return numerator_; }
  void add_numerator_term(const XExponents& x, const MultiPoly& coeff);

  /// Order of the pole at x_var = 0 carried by the numerator (0 if none).
  int pole_order(std::size_t var) const;

  /// Value once every variable is dead. Throws std::logic_error otherwise.
  MultiPoly scalar_value() const;

 private:
  friend ResidueExpr residue_at_zero(const ResidueExpr& g, std::size_t var, int pole_order);

  std::size_t na_;
  std::vector<bool> alive_;
  std::vector<bool> exp_;
  std::map<std::pair<std::size_t, std::size_t>, int> roots_;
  Numerator numerator_;
};

/// Res_{x_var = 0} g, treating the other live variables as nonzero
/// parameters. Every factor other than the numerator's monomials is expanded
/// as a power series in x_var, so the result is the coefficient of x_var^{-1}.
/// Throws ResidueError if the numerator's pole exceeds `pole_order` or a
/// factor cannot be expanded around x_var = 0.
ResidueExpr residue_at_zero(const ResidueExpr& g, std::size_t var, int pole_order);

/// Applies residue_at_zero for each variable of `order` in turn (the first
/// entry is taken first, i.e. innermost).
MultiPoly iterated_residue(const ResidueExpr& f, std::span<const std::size_t> order);

/// x_r innermost, then x_{r-1}, ..., x_1 last: {r-1, ..., 0} with 0-based indices.
std::vector<std::size_t> standard_residue_order(int rank);

struct VolumePolynomial {
  MultiplicityMatrix m;
  MultiPoly poly;
};

/// Volume polynomial of the flow polytope on the nice chamber.
VolumePolynomial iterated_residue(const MultiplicityMatrix& m);

/// Exponent vector (M_1 - 1, ..., M_r - 1).
Exponents corner_exponents(const MultiplicityMatrix& m);

/// 1 / prod_l (M_l - 1)!
Rational expected_corner_coefficient(const MultiplicityMatrix& m);

}  // namespace flowvol
