#include "flowvol/induction.hpp"

#include <algorithm>

namespace flowvol {

namespace {

// Distributes `remaining` over variables idx..r-1 (operator variables 1..r-1).
void collect_dq(const MultiplicityMatrix& m, int idx, unsigned remaining, Exponents& exps,
                const Integer& coeff, MultiPoly& out) {
  const int r = m.rank();
  if (idx == r) {
    if (remaining == 0) out.add_term(exps, Rational(coeff));
    return;
  }
  const auto mult = static_cast<unsigned>(m(0, idx));
  for (unsigned p = 0; p <= std::min(remaining, mult); ++p) {
    exps[static_cast<std::size_t>(idx)] = p;
    collect_dq(m, idx + 1, remaining - p, exps, coeff * binomial(mult, p), out);
  }
  exps[static_cast<std::size_t>(idx)] = 0;
}

void require_top_layer(const MultiPoly& g, unsigned h, const char* what) {
  for (const auto& [e, c] : g.terms()) {
    if (e[0] != 0) throw InductionError(std::string(what) + ": polynomial involves a_1");
    if (total_degree(e) != h) {
      throw InductionError(std::string(what) + ": expected a homogeneous polynomial of degree " +
                           std::to_string(h));
    }
  }
}

}  // namespace

DiffOperator build_dq(const MultiplicityMatrix& m, unsigned q) {
  if (q == 0) throw std::invalid_argument("build_dq: q must be positive");
  const auto n = static_cast<std::size_t>(m.rank());
  MultiPoly symbol(n);
  Exponents exps(n, 0);
  collect_dq(m, 1, q, exps, Integer(1), symbol);
  return DiffOperator(std::move(symbol));
}

DiffOperator OperatorLadder::dq(unsigned q) const {
  if (q == 0) throw std::invalid_argument("OperatorLadder::dq: q must be positive");
  if (q > d.size()) return DiffOperator(static_cast<std::size_t>(m.rank()));
  return d[q - 1];
}

OperatorLadder operator_ladder(const MultiplicityMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rank());
  OperatorLadder ladder{m, {}, {}};
  const int q_max = m.row_sum(0) - m(0, m.rank());
  for (int q = 1; q <= q_max; ++q) ladder.d.push_back(build_dq(m, static_cast<unsigned>(q)));

  const int h = m.rank() >= 2 ? m.lower_degree() : 0;
  ladder.e.push_back(DiffOperator::identity(n));
  for (int k = 1; k <= h; ++k) {
    DiffOperator en(n);
    for (int j = 1; j <= k; ++j) {
      const DiffOperator term = ladder.dq(static_cast<unsigned>(j)) * ladder.e[static_cast<std::size_t>(k - j)];
      if (j % 2 == 1) {
        en += term;
      } else {
        en -= term;
      }
    }
    ladder.e.push_back(std::move(en));
  }
  return ladder;
}

VolumePolynomial lift_volume(const VolumePolynomial& v_prev, const MultiplicityMatrix& m) {
  if (m.rank() < 2) throw std::invalid_argument("lift_volume: target rank must be at least 2");
  if (!(v_prev.m == m.sub_matrix())) {
    throw std::invalid_argument("lift_volume: v_prev does not belong to the sub-matrix of m");
  }
  const auto n = static_cast<std::size_t>(m.rank());
  const int h = m.lower_degree();
  if (v_prev.poly.nvars() + 1 != n) throw std::invalid_argument("lift_volume: v_prev has the wrong variable count");
  if (v_prev.poly.is_zero() || !v_prev.poly.is_homogeneous() || v_prev.poly.total_degree() != h) {
    throw InductionError("lift_volume: v_prev must be homogeneous of degree h = " + std::to_string(h));
  }

  const MultiPoly base = embed(v_prev.poly, n, 1);
  const OperatorLadder ladder = operator_ladder(m);
  const int m1 = m.row_sum(0);

  MultiPoly v(n);
  Exponents a1(n, 0);
  for (int k = 0; k <= h; ++k) {
    const MultiPoly layer = ladder.e[static_cast<std::size_t>(k)].apply(base);
    const auto power = static_cast<unsigned>(m1 - 1 + k);
    a1[0] = power;
    v += layer * MultiPoly::monomial(a1, make_rational(1, factorial(power)));
  }
  return {m, std::move(v)};
}

MultiPoly LayerDecomposition::reassemble() const {
  if (layers.empty()) throw std::logic_error("LayerDecomposition: no layers");
  const std::size_t n = layers.front().nvars();
  MultiPoly phi(n);
  Exponents a1(n, 0);
  for (unsigned k = 0; k < layers.size(); ++k) {
    a1[0] = degree - k;
    phi += layers[k] * MultiPoly::monomial(a1);
  }
  return phi;
}

LayerDecomposition decompose_layers(const MultiPoly& phi) {
  if (phi.nvars() == 0) throw std::invalid_argument("decompose_layers: no variables");
  if (!phi.is_homogeneous()) throw std::invalid_argument("decompose_layers: polynomial is not homogeneous");
  const auto d = static_cast<unsigned>(std::max(phi.total_degree(), 0L));
  LayerDecomposition out{d, std::vector<MultiPoly>(d + 1, MultiPoly(phi.nvars()))};
  for (const auto& [e, c] : phi.terms()) {
    Exponents rest = e;
    const unsigned k = d - e[0];
    rest[0] = 0;
    out.layers[k].add_term(rest, c);
  }
  return out;
}

LayerDecomposition layer_recursion(const MultiplicityMatrix& m, unsigned d, const MultiPoly& g_top, unsigned n_start) {
  if (m.rank() < 2) throw std::invalid_argument("layer_recursion: rank must be at least 2");
  const auto n = static_cast<std::size_t>(m.rank());
  if (g_top.nvars() != n) throw std::invalid_argument("layer_recursion: g_top has the wrong variable count");
  const long h = m.lower_degree();
  const long m1 = m.row_sum(0);
  const long dd = d;
  if (dd - h - m1 + static_cast<long>(n_start) < 0) {
    throw InductionError("layer_recursion: factorial argument d - h - M_1 + n = " +
                         std::to_string(dd - h - m1 + static_cast<long>(n_start)) + " is negative");
  }
  require_top_layer(g_top, static_cast<unsigned>(h), "layer_recursion");
  if (h > dd && !g_top.is_zero()) throw InductionError("layer_recursion: top layer h exceeds the degree");

  LayerDecomposition out{d, std::vector<MultiPoly>(d + 1, MultiPoly(n))};
  if (n_start >= 1 && h <= dd) out.layers[static_cast<std::size_t>(h)] = g_top;

  const OperatorLadder ladder = operator_ladder(m);
  const long j_max = static_cast<long>(ladder.d.size());
  for (long step = n_start; step <= h; ++step) {
    const long k = h - step;
    if (k > dd) continue;
    MultiPoly g(n);
    for (long j = 1; j <= j_max; ++j) {
      const long above = k + j;
      if (above > h || above > dd) break;
      const MultiPoly& higher = out.layers[static_cast<std::size_t>(above)];
      if (higher.is_zero()) continue;
      // (d-h+n-j)! / (d-h+n)!
      const auto top = static_cast<unsigned long>(dd - h + step);
      const auto low = static_cast<unsigned long>(dd - h + step - j);
      Rational c = make_rational(1, falling_factorial(top, top - low));
      if (j % 2 == 0) c = -c;
      g += ladder.dq(static_cast<unsigned>(j)).apply(higher) * c;
    }
    out.layers[static_cast<std::size_t>(k)] = std::move(g);
  }
  return out;
}

}  // namespace flowvol
