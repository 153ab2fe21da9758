#include "flowvol/multiplicity.hpp"

#include <numeric>
#include <stdexcept>

namespace flowvol {

MultiplicityMatrix::MultiplicityMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 1) throw std::invalid_argument("multiplicity: rank must be at least 1");
  const auto expected = static_cast<std::size_t>(rank_) * static_cast<std::size_t>(rank_ + 1) / 2;
  if (entries_.size() != expected) {
    throw std::invalid_argument("multiplicity: rank " + std::to_string(rank_) + " needs " +
                                std::to_string(expected) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = i + 1; j <= rank_; ++j) {
      if ((*this)(i, j) < 1) {
        throw std::invalid_argument("multiplicity: m[" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + "] must be positive");
      }
    }
  }
}

std::size_t MultiplicityMatrix::index(int i, int j) const {
  if (i < 0 || j <= i || j > rank_) {
    throw std::out_of_range("multiplicity: no root (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  // Rows 0..i-1 hold r, r-1, ..., r-i+1 entries.
  const int before = i * rank_ - i * (i - 1) / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

int MultiplicityMatrix::operator()(int i, int j) const { return entries_[index(i, j)]; }

int MultiplicityMatrix::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int MultiplicityMatrix::row_sum(int node) const {
  if (node < 0 || node >= rank_) throw std::out_of_range("multiplicity: row index out of range");
  int sum = 0;
  for (int j = node + 1; j <= rank_; ++j) sum += (*this)(node, j);
  return sum;
}

int MultiplicityMatrix::lower_degree() const { return total() - row_sum(0) - (rank_ - 1); }

MultiplicityMatrix MultiplicityMatrix::sub_matrix() const {
  if (rank_ < 2) throw std::invalid_argument("multiplicity: sub_matrix needs rank >= 2");
  std::vector<int> sub;
  for (int i = 1; i < rank_; ++i) {
    for (int j = i + 1; j <= rank_; ++j) sub.push_back((*this)(i, j));
  }
  return {rank_ - 1, std::move(sub)};
}

std::string to_string(const MultiplicityMatrix& m) {
  std::string out = "(";
  for (std::size_t k = 0; k < m.entries().size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(m.entries()[k]);
  }
  return out + ")";
}

std::vector<MultiplicityMatrix> enumerate_matrices(int rank, int lo, int hi) {
  if (rank < 1 || lo < 1 || hi < lo) throw std::invalid_argument("enumerate_matrices: bad range");
  const auto n = static_cast<std::size_t>(rank * (rank + 1) / 2);
  std::vector<MultiplicityMatrix> out;
  std::vector<int> entries(n, lo);
  while (true) {
    out.emplace_back(rank, entries);
    std::size_t k = n;
    while (k > 0 && entries[k - 1] == hi) entries[--k] = lo;
    if (k == 0) break;
    ++entries[k - 1];
  }
  return out;
}

}  // namespace flowvol
