// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "flowvol/diffop.hpp"
#include "flowvol/induction.hpp"
#include "flowvol/oracle.hpp"
#include "flowvol/residue.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace flowvol;
namespace oracle = flowvol::testing;

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "\n    failed: " << what;
    }
  }
};

const MultiplicityMatrix kExample(3, {1, 1, 2, 1, 2, 2});

std::vector<MultiplicityMatrix> family() {
  auto out = enumerate_matrices(2, 1, 2);
  for (auto& m : enumerate_matrices(3, 1, 2)) out.push_back(std::move(m));
  return out;
}

MultiPoly scaled_power(std::size_t nvars, unsigned k) {
  return Rational(1) / Rational(factorial(k)) * pow(MultiPoly::variable(nvars, 0), k);
}

void single_variable_family(Check& c) {
  for (int m12 = 1; m12 <= 6; ++m12) {
    const MultiplicityMatrix m(1, {m12});
    c.expect(iterated_residue(m).poly == scaled_power(1, static_cast<unsigned>(m12 - 1)), "m12=" + std::to_string(m12));
  }
}

void rank_two_family(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    const MultiplicityMatrix m(2, {n, 1, 1});
    c.expect(iterated_residue(m).poly == scaled_power(2, static_cast<unsigned>(n)), "n=" + std::to_string(n));
  }
}

void golden(Check& c) {
  const auto v = iterated_residue(kExample).poly;
  c.expect(v == oracle::example_r3_volume(), "polynomial equality");
  c.expect(to_string(v) == to_string(oracle::example_r3_volume()), "canonical rendering");
  c.expect(v == oracle::series_coefficient_volume(kExample), "series-expansion oracle");
}

void annihilation(Check& c) {
  for (const auto& m : family()) {
    const auto v = iterated_residue(m);
    for (const auto& op : pde_system(m).ops) c.expect(op.apply(v.poly).is_zero(), to_string(m) + " " + to_string(op));
  }
}

void uniqueness(Check& c) {
  for (const auto& m : family()) {
    const auto d = static_cast<unsigned>(m.degree());
    const auto basis = solution_space(m, d);
    c.expect(basis.size() == 1, to_string(m) + " dimension in degree M-r");
    if (basis.size() == 1) c.expect(basis.front() == iterated_residue(m).poly, to_string(m) + " generator");
    c.expect(solution_space(m, d + 1).empty(), to_string(m) + " dimension in degree M-r+1");
  }
}

void corner(Check& c) {
  std::vector<MultiplicityMatrix> ms = family();
  std::mt19937_64 rng(77);
  for (int i = 0; i < 10; ++i) ms.push_back(oracle::random_matrix(rng, 4, 3));
  for (const auto& m : ms) {
    Integer denom = 1;
    for (int l = 0; l < m.rank(); ++l) denom *= factorial(static_cast<unsigned long>(m.row_sum(l) - 1));
    const Exponents corner = corner_exponents(m);
    c.expect(iterated_residue(m).poly.coefficient(corner) == Rational(1) / Rational(denom), to_string(m));
  }
  c.expect(iterated_residue(kExample).poly.coefficient({3, 2, 1}) == Rational(1, 12), "a1^3*a2^2*a3 = 1/12");
}

void lift(Check& c) {
  const auto a2 = MultiPoly::variable(2, 0);
  const auto a3 = MultiPoly::variable(2, 1);
  const VolumePolynomial sub{kExample.sub_matrix(), Rational(1, 6) * pow(a2, 2) * (a2 + Rational(3) * a3)};
  c.expect(lift_volume(sub, kExample).poly == oracle::example_r3_volume(), "example lift");
  for (const auto& m : family()) {
    c.expect(lift_volume(iterated_residue(m.sub_matrix()), m).poly == iterated_residue(m).poly, to_string(m));
  }
}

void ladder(Check& c) {
  const MultiplicityMatrix m(3, {3, 2, 1, 2, 2, 2});
  const auto lad = operator_ladder(m);
  c.expect(lad.e.size() >= 4, "ladder reaches E_3");
  if (lad.e.size() < 4) return;
  const auto D1 = oracle::dq_from_generating_function(m, 1);
  const auto D2 = oracle::dq_from_generating_function(m, 2);
  const auto D3 = oracle::dq_from_generating_function(m, 3);
  c.expect(lad.e[1] == D1, "E_1 = D_1");
  c.expect(lad.e[2] == D1 * D1 - D2, "E_2 = D_1^2 - D_2");
  c.expect(lad.e[3] == D1 * D1 * D1 - Rational(2) * D1 * D2 + D3, "E_3 = D_1^3 - 2 D_1 D_2 + D_3");
}

void oracle_agreement(Check& c) {
  const std::vector<MultiplicityMatrix> ms{MultiplicityMatrix(2, {1, 1, 1}), MultiplicityMatrix(2, {2, 1, 1}), kExample};
  for (const auto& m : ms) {
    const auto r = static_cast<std::size_t>(m.rank());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      AVector a(r);
      for (std::size_t i = 0; i < r; ++i) a[i] = 1 + ((mask >> i) & 1);
      const auto cmp = compare_volume(m, a);
      std::ostringstream what;
      what << to_string(m) << " a=" << mask;
      c.expect(cmp.agree(), what.str());
    }
  }
  const auto cmp = compare_volume(kExample, AVector{1, 1, 1});
  c.expect(cmp.ehrhart_value == Rational(2, 9) && cmp.residue_value == Rational(2, 9), "r=3 at a=(1,1,1) is 2/9");
  c.expect(cmp.table.counts.size() == 7, "counts up to t=6");
  if (cmp.table.counts.size() >= 2) {
    c.expect(cmp.table.counts[1] == oracle::brute_force_count(kExample, {1, 1, 1}), "t=1 count vs brute force");
  }
}

void properties(Check& c) {
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = oracle::random_matrix(rng, 2 + static_cast<int>(rng() % 3), 3);
    const auto v = iterated_residue(m).poly;
    std::vector<Rational> a;
    std::vector<Rational> ta;
    const Rational t = oracle::random_rational(rng);
    for (int i = 0; i < m.rank(); ++i) {
      a.push_back(oracle::random_rational(rng));
      ta.push_back(t * a.back());
    }
    Rational scale = 1;
    for (int k = 0; k < m.degree(); ++k) scale *= t;
    c.expect(evaluate(v, ta) == scale * evaluate(v, a), "homogeneity " + to_string(m));
    for (unsigned q = 1; q <= 4; ++q) {
      c.expect(build_dq(m, q) == oracle::dq_from_generating_function(m, q), "D_q identity " + to_string(m));
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    ResidueExpr g(n, n);
    for (std::size_t k = 0; k < n; ++k) g.set_exp(k, trial % 2 == 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g.set_root_factor(i, j, 1 + static_cast<int>(rng() % 2));
    }
    ResidueExpr::XExponents e(n);
    for (auto& x : e) x = static_cast<int>(rng() % 5) - 3;
    g.add_numerator_term(e, oracle::random_poly(rng, n, 2, 2) + MultiPoly::constant(n, 1));
    const std::size_t v = rng() % n;
    const auto dg = oracle::residue_derivative(g, v);
    c.expect(oracle::is_zero_expr(residue_at_zero(dg, v, std::max(dg.pole_order(v), 0))), "residue of derivative");
  }
  for (const auto& m : family()) {
    const auto f = ResidueExpr::from_kernel(build_kernel(m));
    std::vector<std::size_t> reversed;
    for (int i = 0; i < m.rank(); ++i) reversed.push_back(static_cast<std::size_t>(i));
    const auto standard = iterated_residue(f, standard_residue_order(m.rank()));
    c.expect(standard == oracle::series_coefficient_volume(m), "standard order " + to_string(m));
    c.expect(iterated_residue(f, reversed) != standard, "reversed order differs " + to_string(m));
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"single-variable family a1^(m12-1)/(m12-1)!", single_variable_family},
      {"rank-two family a1^n/n!", rank_two_family},
      {"rank-three golden polynomial", golden},
      {"annihilation by the operator system (r=2,3, m in {1,2})", annihilation},
      {"solution space: dim 1 in degree M-r, dim 0 in M-r+1", uniqueness},
      {"corner coefficient 1/prod (M_l-1)!", corner},
      {"rank induction lift", lift},
      {"E_1, E_2, E_3 ladder", ladder},
      {"lattice-point oracle agreement", oracle_agreement},
      {"seeded property suites", properties},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "\n    exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " (" << ms << " ms)"
              << c.detail.str() << '\n';
    if (!c.ok) ++failures;
  }
  std::cout << (10 - failures) << "/10 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
