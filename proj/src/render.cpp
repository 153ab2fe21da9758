#include "flowvol/render.hpp"

#include <algorithm>

namespace flowvol {

namespace {

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_monomial(const Exponents& e, std::string_view symbol) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += std::string(symbol) + "_{" + std::to_string(i + 1) + "}";
    if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
  }
  return out;
}

std::string latex_sum(const MultiPoly& p, std::string_view symbol) {
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
    const std::string mono = latex_monomial(e, symbol);
    if (mono.empty()) {
      out += latex_rational(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += latex_rational(mag) + mono;
    }
  }
  return out;
}

}  // namespace

std::string to_latex(const MultiPoly& p, std::string_view symbol) {
  if (p.is_zero()) return "0";

  // content = gcd(numerators) / lcm(denominators), signed like the leading term
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  Exponents common = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
    for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(common[i], e[i]);
  }
  Rational content = make_rational(num_gcd, den_lcm);
  if (p.terms().begin()->second < 0) content = -content;

  MultiPoly primitive(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents reduced = e;
    for (std::size_t i = 0; i < reduced.size(); ++i) reduced[i] -= common[i];
    primitive.add_term(reduced, c / content);
  }

  const std::string factor = latex_monomial(common, symbol);
  if (primitive.size() == 1) {
    // A single term: nothing to factor.
    return latex_sum(p, symbol);
  }

  std::string out;
  if (content == -1) {
    out += "-";
  } else if (content != 1) {
    out += (content < 0 ? "-" : "") + latex_rational(abs(content)) + " ";
  }
  if (factor.empty()) {
    return out + (out.empty() ? "" : "(") + latex_sum(primitive, symbol) + (out.empty() ? "" : ")");
  }
  return out + factor + "(" + latex_sum(primitive, symbol) + ")";
}

std::string to_latex(const DiffOperator& d) { return latex_sum(d.symbol(), "\\partial"); }

}  // namespace flowvol
