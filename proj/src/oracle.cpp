#include "flowvol/oracle.hpp"

#include "flowvol/residue.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace flowvol {

namespace {

void check_supply(const MultiplicityMatrix& m, std::span<const std::int64_t> a) {
  if (a.size() != static_cast<std::size_t>(m.rank())) {
    throw std::invalid_argument("oracle: a needs " + std::to_string(m.rank()) + " entries");
  }
  for (auto v : a) {
    if (v < 0) throw std::invalid_argument("oracle: a has a negative entry");
  }
}

// Number of ways to split s units over m parallel copies of a root.
Integer copies(std::int64_t s, int mult) {
  return binomial(static_cast<unsigned long>(s + mult - 1), static_cast<unsigned long>(mult - 1));
}

}  // namespace

bool in_nice_chamber(std::span<const std::int64_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v > 0; });
}

bool in_nice_chamber(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v > 0; });
}

Integer count_lattice_points(const MultiplicityMatrix& m, std::span<const std::int64_t> a) {
  check_supply(m, a);
  const int r = m.rank();

  // State: current balance at nodes 0..r-1 after a prefix of roots.
  std::map<AVector, Integer> states;
  states.emplace(AVector(a.begin(), a.end()), Integer(1));

  for (int i = 0; i < r; ++i) {
    const auto si = static_cast<std::size_t>(i);
    for (int j = i + 1; j < r; ++j) {
      const int mult = m(i, j);
      const auto sj = static_cast<std::size_t>(j);
      std::map<AVector, Integer> next;
      for (const auto& [balance, ways] : states) {
        AVector b = balance;
        for (std::int64_t s = 0; s <= balance[si]; ++s) {
          b[si] = balance[si] - s;
          b[sj] = balance[sj] + s;
          next[b] += ways * copies(s, mult);
        }
      }
      states = std::move(next);
    }
    // The sink root (i, r) takes whatever is left at node i.
    const int mult = m(i, r);
    std::map<AVector, Integer> next;
    for (const auto& [balance, ways] : states) {
      AVector b = balance;
      b[si] = 0;
      next[b] += ways * copies(balance[si], mult);
    }
    states = std::move(next);
  }

  Integer total = 0;
  for (const auto& [balance, ways] : states) total += ways;
  return total;
}

Rational CountTable::predict(std::int64_t t) const {
  Rational value = 0;
  Rational power = 1;
  for (const auto& c : fitted) {
    value += c * power;
    power *= t;
  }
  return value;
}

CountTable count_table(const MultiplicityMatrix& m, std::span<const std::int64_t> a, int max_dilation) {
  check_supply(m, a);
  if (!in_nice_chamber(a)) {
    throw std::invalid_argument("oracle: a must be strictly inside the nice chamber (all a_i >= 1)");
  }
  const int degree = m.degree();
  if (max_dilation < 0) max_dilation = degree;
  if (max_dilation < degree) {
    throw std::invalid_argument("oracle: need dilations up to at least M - r = " + std::to_string(degree));
  }

  CountTable table{m, AVector(a.begin(), a.end()), {}, {}};
  AVector scaled(a.size());
  for (int t = 0; t <= max_dilation; ++t) {
    for (std::size_t i = 0; i < a.size(); ++i) scaled[i] = a[i] * t;
    table.counts.push_back(count_lattice_points(m, scaled));
  }

  // Newton divided differences on the nodes t = 0..degree.
  const auto n = static_cast<std::size_t>(degree) + 1;
  std::vector<Rational> dd(n);
  for (std::size_t k = 0; k < n; ++k) dd[k] = Rational(table.counts[k]);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long>(level));
    }
  }
  // Expand sum_k dd[k] * t (t-1) ... (t-k+1) into monomial coefficients.
  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * static_cast<long>(k);
    }
    basis = std::move(next);
  }
  table.fitted = std::move(coeffs);

  for (int t = 0; t <= max_dilation; ++t) {
    if (table.predict(t) != Rational(table.counts[static_cast<std::size_t>(t)])) {
      throw OracleError("oracle: count at dilation " + std::to_string(t) + " does not fit a polynomial of degree " +
                        std::to_string(degree));
    }
  }
  return table;
}

Rational ehrhart_leading_coefficient(const MultiplicityMatrix& m, std::span<const std::int64_t> a, int max_dilation) {
  return count_table(m, a, max_dilation).fitted.back();
}

VolumeComparison compare_volume(const MultiplicityMatrix& m, std::span<const std::int64_t> a, int max_dilation) {
  CountTable table = count_table(m, a, max_dilation);
  std::vector<Rational> point;
  for (auto v : a) point.emplace_back(static_cast<long>(v));
  const VolumePolynomial v = iterated_residue(m);
  Rational residue_value = evaluate(v.poly, point);
  Rational ehrhart_value = table.fitted.back();
  return {AVector(a.begin(), a.end()), std::move(residue_value), std::move(ehrhart_value), std::move(table)};
}

std::string render(const VolumeComparison& cmp) {
  std::ostringstream os;
  os << "a = (";
  for (std::size_t i = 0; i < cmp.a.size(); ++i) os << (i ? "," : "") << cmp.a[i];
  os << ")\n";
  os << "counts:";
  for (const auto& c : cmp.table.counts) os << ' ' << c.get_str();
  os << '\n';
  os << "residue value: " << to_string(cmp.residue_value) << '\n';
  os << "ehrhart leading coefficient: " << to_string(cmp.ehrhart_value) << '\n';
  os << (cmp.agree() ? "agree" : "MISMATCH") << '\n';
  return os.str();
}

}  // namespace flowvol
