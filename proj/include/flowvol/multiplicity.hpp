#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flowvol {

/// Positive multiplicities m(i, j) for the roots e_i - e_j of type A_r.
///
/// Nodes are numbered 0..r; node r is the sink, so m(i, r) is the
/// multiplicity of the root pairing variable a_i with the sink. Entries are
/// stored row-major: (0,1), (0,2), ..., (0,r), (1,2), ..., (r-1,r).
class MultiplicityMatrix {
 public:
  // Throws std::invalid_argument unless r >= 1, entries.size() == r(r+1)/2
  // and every entry is >= 1.
  MultiplicityMatrix(int rank, std::vector<int> entries);

  int rank() const { return rank_; }
  int operator()(int i, int j) const;
  const std::vector<int>& entries() const { return entries_; }

  int total() const;                 // M
  int row_sum(int node) const;       // M_l for l = node, summing m(node, j) over j > node
  int degree() const { return total() - rank_; }  // d = M - r
  int lower_degree() const;          // h: degree of the rank r-1 volume for sub_matrix()

  /// Multiplicities among nodes 1..r, re-indexed as a rank r-1 matrix.
  /// Requires rank() >= 2.
  MultiplicityMatrix sub_matrix() const;

  friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int rank_;
  std::vector<int> entries_;
};

// "(1,1,2,1,2,2)"
std::string to_string(const MultiplicityMatrix& m);

/// Every matrix of rank r with entries in [lo, hi], in lexicographic order of
/// the row-major entry list.
std::vector<MultiplicityMatrix> enumerate_matrices(int rank, int lo, int hi);

}  // namespace flowvol
