#pragma once

#include "flowvol/multiplicity.hpp"
#include "flowvol/multipoly.hpp"
#include "flowvol/residue.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace flowvol {

/// Constant-coefficient differential operator: a polynomial in the
/// commuting symbols d_1..d_n, where d_i differentiates variable i.
class DiffOperator {
 public:
  explicit DiffOperator(std::size_t nvars) : symbol_(nvars) {}
  explicit DiffOperator(MultiPoly symbol) : symbol_(std::move(symbol)) {}

  static DiffOperator identity(std::size_t nvars);
  static DiffOperator partial(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return symbol_.nvars(); }
  const MultiPoly& symbol() const { return symbol_; }
  bool is_zero() const { return symbol_.is_zero(); }
  // Highest total order; -1 for the zero operator.
  long order() const { return symbol_.total_degree(); }

  MultiPoly apply(const MultiPoly& p) const;

  DiffOperator& operator+=(const DiffOperator& rhs);
  DiffOperator& operator-=(const DiffOperator& rhs);
  friend DiffOperator operator+(DiffOperator l, const DiffOperator& r) { return l += r; }
  friend DiffOperator operator-(DiffOperator l, const DiffOperator& r) { return l -= r; }
  friend DiffOperator operator*(const DiffOperator& l, const DiffOperator& r) {
    return DiffOperator(l.symbol_ * r.symbol_);
  }
  friend DiffOperator operator*(const Rational& c, const DiffOperator& d) { return DiffOperator(c * d.symbol_); }
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  MultiPoly symbol_;
};

DiffOperator pow(const DiffOperator& d, unsigned n);

// Canonical rendering with symbols "d1".."dn".
std::string to_string(const DiffOperator& d);

MultiPoly apply(const DiffOperator& d, const MultiPoly& p);

/// The r annihilating operators, ops[k] belonging to node l = r-1-k, i.e.
/// listed from the last node up to node 0:
///   prod_{l<j<r} (d_l - d_j)^{m(l,j)} * d_l^{m(l,r)}.
struct PdeSystem {
  MultiplicityMatrix m;
  std::vector<DiffOperator> ops;

  const DiffOperator& for_node(int l) const { return ops.at(static_cast<std::size_t>(m.rank() - 1 - l)); }
};

PdeSystem pde_system(const MultiplicityMatrix& m);

/// True iff every operator of pde_system(m) kills v.poly.
/// Throws std::invalid_argument if v.m differs from m.
bool annihilates(const MultiplicityMatrix& m, const VolumePolynomial& v);

/// Basis of the homogeneous degree-`degree` polynomials killed by the whole
/// system, from an exact null-space computation. Each basis vector is
/// normalized to coefficient 1 on its pivot-free monomial; in degree M - r
/// the single generator is instead scaled so its corner coefficient is
/// 1 / prod (M_l - 1)!.
std::vector<MultiPoly> solution_space(const MultiplicityMatrix& m, unsigned degree);

/// Null space of an integer matrix (rows of equal length), computed with
/// fraction-free elimination; each vector has a 1 in its free column.
std::vector<std::vector<Rational>> integer_null_space(std::vector<std::vector<Integer>> rows, std::size_t ncols);

}  // namespace flowvol
