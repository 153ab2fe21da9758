#pragma once

#include "flowvol/multiplicity.hpp"
#include "flowvol/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowvol {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supply vector (a_1, ..., a_r); node r absorbs -(a_1 + ... + a_r).
using AVector = std::vector<std::int64_t>;

/// All a_i > 0: a lies in the open nice chamber.
bool in_nice_chamber(std::span<const std::int64_t> a);
bool in_nice_chamber(std::span<const Rational> a);

/// Number of nonnegative integer flows y_{i,j,k} with net supply a.
/// Roots are processed in the order (1,2), (1,3), ..., (1,r+1), (2,3), ...;
/// a root of multiplicity m carrying total flow s contributes C(s+m-1, m-1).
/// Throws std::invalid_argument on a wrong length or a negative entry.
Integer count_lattice_points(const MultiplicityMatrix& m, std::span<const std::int64_t> a);

/// Lattice-point counts of the dilations t*a for t = 0..max_dilation, with
/// the degree-(M - r) polynomial in t fitted through t = 0..M - r.
struct CountTable {
  MultiplicityMatrix m;
  AVector a;
  std::vector<Integer> counts;   // counts[t]
  std::vector<Rational> fitted;  // coefficients of t^0, t^1, ...

  Rational predict(std::int64_t t) const;
};

/// Builds the table; max_dilation defaults to M - r. Throws
/// std::invalid_argument for boundary or negative input or a bound below
/// M - r, and OracleError when some tabulated count misses the fit.
CountTable count_table(const MultiplicityMatrix& m, std::span<const std::int64_t> a, int max_dilation = -1);

/// Leading coefficient of the dilation count polynomial; equals the volume
/// polynomial's value at a. `max_dilation` as for count_table.
Rational ehrhart_leading_coefficient(const MultiplicityMatrix& m, std::span<const std::int64_t> a,
                                     int max_dilation = -1);

struct VolumeComparison {
  AVector a;
  Rational residue_value;
  Rational ehrhart_value;
  CountTable table;

  bool agree() const { return residue_value == ehrhart_value; }
};

VolumeComparison compare_volume(const MultiplicityMatrix& m, std::span<const std::int64_t> a, int max_dilation = -1);

std::string render(const VolumeComparison& cmp);

}  // namespace flowvol
