#include "flowvol/diffop.hpp"

#include <map>
#include <stdexcept>

namespace flowvol {

DiffOperator DiffOperator::identity(std::size_t nvars) { return DiffOperator(MultiPoly::constant(nvars, 1)); }

DiffOperator DiffOperator::partial(std::size_t nvars, std::size_t i) {
  return DiffOperator(MultiPoly::variable(nvars, i));
}

MultiPoly DiffOperator::apply(const MultiPoly& p) const {
  if (p.nvars() != nvars()) throw std::invalid_argument("DiffOperator::apply: variable count mismatch");
  MultiPoly out(p.nvars());
  Exponents e(p.nvars());
  for (const auto& [op_exp, op_coeff] : symbol_.terms()) {
    for (const auto& [p_exp, p_coeff] : p.terms()) {
      Integer scale = 1;
      bool vanishes = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (op_exp[i] > p_exp[i]) {
          vanishes = true;
          break;
        }
        scale *= falling_factorial(p_exp[i], op_exp[i]);
        e[i] = p_exp[i] - op_exp[i];
      }
      if (vanishes) continue;
      out.add_term(e, op_coeff * p_coeff * Rational(scale));
    }
  }
  return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& rhs) {
  symbol_ += rhs.symbol_;
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& rhs) {
  symbol_ -= rhs.symbol_;
  return *this;
}

DiffOperator pow(const DiffOperator& d, unsigned n) { return DiffOperator(pow(d.symbol(), n)); }

std::string to_string(const DiffOperator& d) { return to_string(d.symbol(), "d"); }

MultiPoly apply(const DiffOperator& d, const MultiPoly& p) { return d.apply(p); }

PdeSystem pde_system(const MultiplicityMatrix& m) {
  const int r = m.rank();
  const auto n = static_cast<std::size_t>(r);
  PdeSystem sys{m, {}};
  for (int l = r - 1; l >= 0; --l) {
    const auto dl = DiffOperator::partial(n, static_cast<std::size_t>(l));
    DiffOperator op = pow(dl, static_cast<unsigned>(m(l, r)));
    for (int j = l + 1; j < r; ++j) {
      op = op * pow(dl - DiffOperator::partial(n, static_cast<std::size_t>(j)), static_cast<unsigned>(m(l, j)));
    }
    sys.ops.push_back(std::move(op));
  }
  return sys;
}

bool annihilates(const MultiplicityMatrix& m, const VolumePolynomial& v) {
  if (!(v.m == m)) throw std::invalid_argument("annihilates: multiplicity mismatch between v and m");
  for (const auto& op : pde_system(m).ops) {
    if (!op.apply(v.poly).is_zero()) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> integer_null_space(std::vector<std::vector<Integer>> rows, std::size_t ncols) {
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("integer_null_space: ragged matrix");
  }

  // Fraction-free (Bareiss) reduction to row echelon form.
  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const auto& prow = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      const Integer lead = row[col];
      for (std::size_t c = col + 1; c < ncols; ++c) {
        row[c] = prow[col] * row[c] - lead * prow[c];
        mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = prow[col];
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t k = rank; k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Rational sum = 0;
      for (std::size_t c = pc + 1; c < ncols; ++c) {
        if (rows[k][c] != 0 && x[c] != 0) sum += Rational(rows[k][c]) * x[c];
      }
      x[pc] = -sum / Rational(rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<MultiPoly> solution_space(const MultiplicityMatrix& m, unsigned degree) {
  const auto n = static_cast<std::size_t>(m.rank());
  const auto columns = monomials_of_degree(n, degree);
  const PdeSystem sys = pde_system(m);

  // One row per (operator, image monomial); operator coefficients and
  // falling factorials are integers, so the matrix is integral.
  std::map<std::pair<std::size_t, Exponents>, std::vector<Integer>> row_map;
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const MultiPoly mono = MultiPoly::monomial(columns[col]);
    for (std::size_t k = 0; k < sys.ops.size(); ++k) {
      const MultiPoly image = sys.ops[k].apply(mono);
      for (const auto& [e, c] : image.terms()) {
        auto [it, inserted] = row_map.try_emplace({k, e}, columns.size(), Integer(0));
        if (c.get_den() != 1) throw std::logic_error("solution_space: non-integral operator image");
        it->second[col] = c.get_num();
      }
    }
  }
  std::vector<std::vector<Integer>> rows;
  rows.reserve(row_map.size());
  for (auto& [key, row] : row_map) rows.push_back(std::move(row));

  std::vector<MultiPoly> basis;
  for (const auto& vec : integer_null_space(std::move(rows), columns.size())) {
    MultiPoly p(n);
    for (std::size_t col = 0; col < columns.size(); ++col) p.add_term(columns[col], vec[col]);
    basis.push_back(std::move(p));
  }

  if (basis.size() == 1 && static_cast<int>(degree) == m.degree()) {
    const Rational corner = basis.front().coefficient(corner_exponents(m));
    if (corner != 0) basis.front() *= expected_corner_coefficient(m) / corner;
  }
  return basis;
}

}  // namespace flowvol
