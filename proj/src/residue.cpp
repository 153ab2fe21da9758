#include "flowvol/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowvol {

namespace {

using Laurent = ResidueExpr::Numerator;

void accumulate(Laurent& target, const ResidueExpr::XExponents& x, const MultiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = target.try_emplace(x, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) target.erase(it);
  }
}

// One Taylor coefficient of an analytic factor: scalar * x^shift * a^aexp.
struct SeriesTerm {
  ResidueExpr::XExponents shift;
  Exponents aexp;
  Rational scalar;
};

// Coefficients c_0..c_order of a product of analytic factors in one variable.
using Series = std::vector<Laurent>;

Series multiply_truncated(const Series& lhs, const std::vector<SeriesTerm>& factor, std::size_t order) {
  Series out(order + 1);
  ResidueExpr::XExponents x;
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t s = 0; s <= n; ++s) {
      const SeriesTerm& term = factor[s];
      if (term.scalar == 0) continue;
      const MultiPoly mono = MultiPoly::monomial(term.aexp, term.scalar);
      for (const auto& [ex, coeff] : lhs[n - s]) {
        x = ex;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += term.shift[i];
        accumulate(out[n], x, coeff * mono);
      }
    }
  }
  return out;
}

}  // namespace

ResidueKernel build_kernel(const MultiplicityMatrix& m) { return ResidueKernel{m}; }

std::string to_string(const ResidueKernel& kernel) {
  const int r = kernel.m.rank();
  std::string exponent;
  for (int i = 0; i < r; ++i) {
    if (i > 0) exponent += " + ";
    exponent += "a" + std::to_string(i + 1) + "*x" + std::to_string(i + 1);
  }
  std::vector<std::string> factors;
  for (int i = 0; i < r; ++i) {
    const int p = kernel.m(i, r);
    std::string f = "x" + std::to_string(i + 1);
    if (p > 1) f += "^" + std::to_string(p);
    factors.push_back(f);
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int p = kernel.m(i, j);
      std::string f = "(x" + std::to_string(i + 1) + " - x" + std::to_string(j + 1) + ")";
      if (p > 1) f += "^" + std::to_string(p);
      factors.push_back(f);
    }
  }
  std::string denom;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0) denom += "*";
    denom += factors[k];
  }
  return "exp(" + exponent + ")/(" + denom + ")";
}

ResidueExpr::ResidueExpr(std::size_t nx, std::size_t na)
    : na_(na), alive_(nx, true), exp_(nx, false) {}

ResidueExpr ResidueExpr::from_kernel(const ResidueKernel& kernel) {
  const auto r = static_cast<std::size_t>(kernel.m.rank());
  ResidueExpr expr(r, r);
  XExponents x(r);
  for (std::size_t i = 0; i < r; ++i) {
    expr.set_exp(i, true);
    x[i] = -kernel.m(static_cast<int>(i), static_cast<int>(r));
    for (std::size_t j = i + 1; j < r; ++j) {
      expr.set_root_factor(i, j, kernel.m(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  expr.add_numerator_term(x, MultiPoly::constant(r, 1));
  return expr;
}

std::size_t ResidueExpr::alive_count() const {
  return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
}

void ResidueExpr::set_exp(std::size_t var, bool on) {
  if (on && !alive_.at(var)) throw std::invalid_argument("ResidueExpr: exponential on a dead variable");
  exp_.at(var) = on;
}

int ResidueExpr::root_factor(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const auto it = roots_.find({i, j});
  return it == roots_.end() ? 0 : it->second;
}

void ResidueExpr::set_root_factor(std::size_t i, std::size_t j, int power) {
  if (i >= j || j >= nx()) throw std::invalid_argument("ResidueExpr: root factor needs i < j < nx");
  if (power < 0) throw std::invalid_argument("ResidueExpr: negative root factor power");
  if (power == 0) {
    roots_.erase({i, j});
  } else {
    roots_[{i, j}] = power;
  }
}

void ResidueExpr::add_numerator_term(const XExponents& x, const MultiPoly& coeff) {
  if (x.size() != nx()) throw std::invalid_argument("ResidueExpr: exponent length mismatch");
  if (coeff.nvars() != na_) throw std::invalid_argument("ResidueExpr: coefficient ring mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!alive_[i] && x[i] != 0) throw std::invalid_argument("ResidueExpr: exponent on a dead variable");
  }
  accumulate(numerator_, x, coeff);
}

int ResidueExpr::pole_order(std::size_t var) const {
  int order = 0;
  for (const auto& [x, c] : numerator_) order = std::max(order, -x.at(var));
  return order;
}

MultiPoly ResidueExpr::scalar_value() const {
  if (alive_count() != 0) throw std::logic_error("ResidueExpr: variables remain");
  if (numerator_.empty()) return MultiPoly(na_);
  return numerator_.begin()->second;
}

ResidueExpr residue_at_zero(const ResidueExpr& g, std::size_t var, int pole_order) {
  if (var >= g.nx() || !g.alive(var)) throw ResidueError("residue: variable is not live");
  const int actual = g.pole_order(var);
  if (actual > pole_order) {
    throw ResidueError("residue: pole of order " + std::to_string(actual) + " at x" +
                       std::to_string(var + 1) + " = 0 exceeds declared order " +
                       std::to_string(pole_order));
  }

  const std::size_t nx = g.nx();
  const std::size_t na = g.na();
  const std::size_t order = actual == 0 ? 0 : static_cast<std::size_t>(actual - 1);

  // Taylor coefficients of every analytic factor that involves x_var.
  std::vector<std::vector<SeriesTerm>> factors;
  if (g.has_exp(var)) {
    if (var >= na) throw ResidueError("residue: exponential has no matching a variable");
    std::vector<SeriesTerm> exp_series;
    for (std::size_t q = 0; q <= order; ++q) {
      Exponents aexp(na, 0);
      aexp[var] = static_cast<unsigned>(q);
      exp_series.push_back({ResidueExpr::XExponents(nx, 0), aexp, make_rational(1, factorial(q))});
    }
    factors.push_back(std::move(exp_series));
  }
  for (const auto& [key, power] : g.root_factors()) {
    const auto [i, j] = key;
    if (i != var && j != var) continue;
    const std::size_t partner = i == var ? j : i;
    if (!g.alive(partner)) {
      throw ResidueError("residue: factor (x" + std::to_string(i + 1) + " - x" + std::to_string(j + 1) +
                         ") has a pole at x" + std::to_string(var + 1) + " = 0 and cannot be expanded");
    }
    // (x_p - x_v)^{-f} = x_p^{-f} sum_s C(f-1+s, s) (x_v / x_p)^s, and
    // (x_v - x_p)^{-f} picks up (-1)^f.
    const bool flip = i == var && power % 2 == 1;
    std::vector<SeriesTerm> root_series;
    for (std::size_t s = 0; s <= order; ++s) {
      ResidueExpr::XExponents shift(nx, 0);
      shift[partner] = -power - static_cast<int>(s);
      Rational c = binomial_series_coeff(static_cast<unsigned long>(power), s);
      if (flip) c = -c;
      root_series.push_back({shift, Exponents(na, 0), c});
    }
    factors.push_back(std::move(root_series));
  }

  Series series(order + 1);
  accumulate(series[0], ResidueExpr::XExponents(nx, 0), MultiPoly::constant(na, 1));
  for (const auto& f : factors) series = multiply_truncated(series, f, order);

  ResidueExpr out(nx, na);
  for (std::size_t i = 0; i < nx; ++i) {
    if (i == var || !g.alive(i)) out.alive_[i] = false;
    out.exp_[i] = out.alive_[i] && g.has_exp(i);
  }
  for (const auto& [key, power] : g.root_factors()) {
    if (key.first != var && key.second != var) out.roots_[key] = power;
  }

  ResidueExpr::XExponents x;
  for (const auto& [ex, coeff] : g.numerator()) {
    const int t = ex[var];
    if (t >= 0) continue;
    const auto n = static_cast<std::size_t>(-1 - t);
    for (const auto& [shift, sc] : series[n]) {
      x = ex;
      x[var] = 0;
      for (std::size_t i = 0; i < nx; ++i) x[i] += shift[i];
      accumulate(out.numerator_, x, coeff * sc);
    }
  }
  return out;
}

MultiPoly iterated_residue(const ResidueExpr& f, std::span<const std::size_t> order) {
  ResidueExpr current = f;
  for (const std::size_t var : order) {
    current = residue_at_zero(current, var, current.pole_order(var));
  }
  return current.scalar_value();
}

std::vector<std::size_t> standard_residue_order(int rank) {
  std::vector<std::size_t> order;
  for (int k = rank - 1; k >= 0; --k) order.push_back(static_cast<std::size_t>(k));
  return order;
}

VolumePolynomial iterated_residue(const MultiplicityMatrix& m) {
  const ResidueExpr f = ResidueExpr::from_kernel(build_kernel(m));
  const auto order = standard_residue_order(m.rank());
  return {m, iterated_residue(f, order)};
}

Exponents corner_exponents(const MultiplicityMatrix& m) {
  Exponents e(static_cast<std::size_t>(m.rank()));
  for (int l = 0; l < m.rank(); ++l) e[static_cast<std::size_t>(l)] = static_cast<unsigned>(m.row_sum(l) - 1);
  return e;
}

Rational expected_corner_coefficient(const MultiplicityMatrix& m) {
  Integer den = 1;
  for (int l = 0; l < m.rank(); ++l) den *= factorial(static_cast<unsigned long>(m.row_sum(l) - 1));
  return make_rational(1, den);
}

}  // namespace flowvol
