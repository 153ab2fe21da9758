#pragma once

#include "flowvol/diffop.hpp"
#include "flowvol/multiplicity.hpp"
#include "flowvol/multipoly.hpp"
#include "flowvol/residue.hpp"

#include <stdexcept>
#include <vector>

namespace flowvol {

// Rank-induction machinery. All polynomials and operators use the rank-r
// variable indexing a_1..a_r (0-based 0..r-1); quantities belonging to the
// sub-matrix live in variables 1..r-1 and never involve variable 0.

class InductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// D_q: sum over nonempty index sets 1 <= i_1 < ... < i_k <= r-1 and positive
/// compositions p_1 + ... + p_k = q of prod_l C(m(0,i_l), p_l) d_{i_1}^{p_1}...
/// Zero once q exceeds sum_{0<i<r} m(0,i). Requires q >= 1.
DiffOperator build_dq(const MultiplicityMatrix& m, unsigned q);

/// D_1..D_{M_1 - m(0,r)} together with E_0..E_h, where
/// E_0 = 1 and E_n = sum_{j=1..n} (-1)^{j+1} D_j E_{n-j}.
struct OperatorLadder {
  MultiplicityMatrix m;
  std::vector<DiffOperator> d;  // d[q-1] = D_q
  std::vector<DiffOperator> e;  // e[n] = E_n

  // D_q, or the zero operator beyond the stored range.
  DiffOperator dq(unsigned q) const;
};

OperatorLadder operator_ladder(const MultiplicityMatrix& m);

/// Rank-r volume from the rank r-1 volume of m.sub_matrix():
///   v = sum_{n=0..h} a_1^{M_1-1+n} / (M_1-1+n)! * E_n v_prev.
/// v_prev.poly has r-1 variables (its own indexing). Throws
/// std::invalid_argument if v_prev.m is not m.sub_matrix() and
/// InductionError if v_prev.poly is not homogeneous of degree h.
VolumePolynomial lift_volume(const VolumePolynomial& v_prev, const MultiplicityMatrix& m);

/// phi = sum_k a_1^{degree-k} * layers[k], each layer a polynomial of
/// degree k in variables 1..r-1.
struct LayerDecomposition {
  unsigned degree = 0;
  std::vector<MultiPoly> layers;

  MultiPoly reassemble() const;
};

/// Splits a homogeneous polynomial by powers of variable 0.
LayerDecomposition decompose_layers(const MultiPoly& phi);

/// Solves the layer relations top-down. Layers above h vanish; for
/// n < n_start the layer g_{h-n} is g_top when n = 0 and zero otherwise;
/// for n = n_start..h,
///   g_{h-n} = sum_{j>=1} (-1)^{j+1} (d-h+n-j)!/(d-h+n)! D_j g_{h-n+j}.
/// Throws InductionError when d - h - M_1 + n_start < 0 (a negative
/// factorial argument: the relation does not exist there), when g_top is
/// not homogeneous of degree h in variables 1..r-1, or when layer h would
/// exceed the degree.
LayerDecomposition layer_recursion(const MultiplicityMatrix& m, unsigned d, const MultiPoly& g_top, unsigned n_start);

}  // namespace flowvol
