#include "flowvol/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace flowvol {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const unsigned dl = total_degree(lhs);
  const unsigned dr = total_degree(rhs);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  if (exps.size() != nvars_) throw std::invalid_argument("MultiPoly::coefficient: exponent length mismatch");
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(flowvol::total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  // Graded order: first and last term bound the degree range.
  return flowvol::total_degree(terms_.begin()->first) == flowvol::total_degree(terms_.rbegin()->first);
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& rhs, const char* op) const {
  if (nvars_ != rhs.nvars_) {
    throw std::invalid_argument(std::string("MultiPoly::") + op + ": variable count mismatch (" +
                                std::to_string(nvars_) + " vs " + std::to_string(rhs.nvars_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs, "add");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs, "sub");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.check_compatible(rhs, "mul");
  MultiPoly out(lhs.nvars_);
  Exponents e(lhs.nvars_);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, coeff] : out.terms_) coeff = -coeff;
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned n) {
  MultiPoly result = MultiPoly::constant(p.nvars(), 1);
  MultiPoly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly partial(const MultiPoly& p, std::size_t i) {
  if (i >= p.nvars()) throw std::out_of_range("partial: variable index out of range");
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: point length mismatch");
  Rational sum = 0;
  Rational power;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

MultiPoly homogeneous_part(const MultiPoly& p, unsigned degree) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) == degree) out.add_term(e, c);
  }
  return out;
}

MultiPoly embed(const MultiPoly& p, std::size_t nvars, std::size_t offset) {
  if (p.nvars() + offset > nvars) throw std::invalid_argument("embed: target ring too small");
  MultiPoly out(nvars);
  Exponents e(nvars, 0);
  for (const auto& [src, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0u);
    std::copy(src.begin(), src.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(e, c);
  }
  return out;
}

namespace {

void fill_monomials(Exponents& current, std::size_t pos, unsigned remaining, std::vector<Exponents>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    current[pos] = k;
    fill_monomials(current, pos + 1, remaining - k, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents current(nvars, 0);
  fill_monomials(current, 0, degree, out);
  return out;
}

std::string to_string(const MultiPoly& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix;
      mono += std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace flowvol
