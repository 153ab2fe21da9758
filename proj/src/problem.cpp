#include "flowvol/problem.hpp"

#include "flowvol/diffop.hpp"
#include "flowvol/induction.hpp"
#include "flowvol/oracle.hpp"
#include "flowvol/render.hpp"
#include "flowvol/residue.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace flowvol {

namespace {

struct RawSpec {
  std::optional<int> rank;
  std::map<std::pair<int, int>, int> entries;  // 1-based node pairs
  std::optional<std::vector<Rational>> a;
  std::optional<int> degree;
  std::optional<int> dilations;
};

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw InputError("spec: malformed integer '" + std::string(s) + "' for " + std::string(what));
  }
  return value;
}

Rational parse_rat(std::string_view s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("spec: ") + e.what());
  }
}

void set_entry(RawSpec& raw, int i, int j, int value) {
  if (!raw.entries.emplace(std::pair{i, j}, value).second) {
    throw InputError("spec: m[" + std::to_string(i) + "," + std::to_string(j) + "] given twice");
  }
}

ProblemSpec finish(const RawSpec& raw) {
  if (!raw.rank) throw InputError("spec: missing rank 'r'");
  const int r = *raw.rank;
  if (r < 1) throw InputError("spec: rank must be at least 1");

  for (const auto& [key, value] : raw.entries) {
    const auto [i, j] = key;
    if (i < 1 || j <= i || j > r + 1) {
      throw InputError("spec: m[" + std::to_string(i) + "," + std::to_string(j) + "] is not a root of rank " +
                       std::to_string(r));
    }
    if (value <= 0) {
      throw InputError("spec: m[" + std::to_string(i) + "," + std::to_string(j) + "]=" + std::to_string(value) +
                       " rejected; multiplicities must be positive");
    }
  }
  std::vector<int> entries;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r + 1; ++j) {
      const auto it = raw.entries.find({i, j});
      if (it == raw.entries.end()) {
        throw InputError("spec: missing entry m[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
      entries.push_back(it->second);
    }
  }
  if (raw.a && raw.a->size() != static_cast<std::size_t>(r)) {
    throw InputError("spec: a has " + std::to_string(raw.a->size()) + " entries, expected " + std::to_string(r));
  }
  if (raw.degree && *raw.degree < 0) throw InputError("spec: degree must be nonnegative");
  if (raw.dilations && *raw.dilations < 0) throw InputError("spec: dilations must be nonnegative");
  return {MultiplicityMatrix(r, std::move(entries)), raw.a, raw.degree, raw.dilations};
}

std::string render_point(const std::vector<Rational>& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + to_string(a[i]);
  return out + ")";
}

std::string render_poly(const MultiPoly& p, const RunOptions& options) {
  return options.latex ? to_latex(p) : to_string(p);
}

std::string render_op(const DiffOperator& d, const RunOptions& options) {
  return options.latex ? to_latex(d) : to_string(d);
}

AVector integer_point(const ProblemSpec& spec) {
  if (!spec.a) throw InputError("oracle-compare: the spec needs a point a=(...)");
  AVector out;
  for (const auto& v : *spec.a) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
      throw InputError("oracle-compare: a must have integer entries");
    }
    if (v <= 0) throw InputError("oracle-compare: a must lie strictly inside the nice chamber (all a_i >= 1)");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

CommandResult run_volume(const ProblemSpec& spec, const RunOptions& options) {
  std::ostringstream os;
  const VolumePolynomial v = iterated_residue(spec.m);
  os << "v = " << render_poly(v.poly, options) << '\n';
  if (spec.a) os << "v" << render_point(*spec.a) << " = " << to_string(evaluate(v.poly, *spec.a)) << '\n';
  if (options.order_check) {
    const ResidueExpr f = ResidueExpr::from_kernel(build_kernel(spec.m));
    auto order = standard_residue_order(spec.m.rank());
    std::reverse(order.begin(), order.end());
    const MultiPoly reversed = iterated_residue(f, order);
    os << "reversed order (x1 innermost) = " << render_poly(reversed, options) << '\n';
    os << "order check: " << (reversed == v.poly ? "orders agree" : "orders differ") << '\n';
  }
  return {kSuccess, os.str()};
}

CommandResult run_check_pde(const ProblemSpec& spec, const RunOptions& options) {
  std::ostringstream os;
  const VolumePolynomial v = iterated_residue(spec.m);
  const PdeSystem sys = pde_system(spec.m);
  std::size_t failures = 0;
  for (const auto& op : sys.ops) {
    const MultiPoly image = op.apply(v.poly);
    os << "(" << render_op(op, options) << ") v = " << render_poly(image, options) << '\n';
    if (!image.is_zero()) ++failures;
  }
  if (failures == 0) {
    os << "all " << sys.ops.size() << " operators annihilate v\n";
    return {kSuccess, os.str()};
  }
  os << failures << " of " << sys.ops.size() << " operators do not annihilate v\n";
  return {kPropertyViolation, os.str()};
}

CommandResult run_kernel(const ProblemSpec& spec, const RunOptions& options) {
  if (!spec.degree) throw InputError("kernel: a degree is required (--degree or degree=<int>)");
  const auto degree = static_cast<unsigned>(*spec.degree);
  std::ostringstream os;
  const auto basis = solution_space(spec.m, degree);
  os << "dimension " << basis.size() << '\n';
  for (std::size_t k = 0; k < basis.size(); ++k) os << "basis[" << k << "] = " << render_poly(basis[k], options) << '\n';

  int status = kSuccess;
  const int top = spec.m.degree();
  if (*spec.degree > top) {
    if (!basis.empty()) {
      os << "expected dimension 0 above degree M - r = " << top << '\n';
      status = kPropertyViolation;
    }
  } else if (*spec.degree == top) {
    const bool unique = basis.size() == 1;
    const bool matches = unique && basis.front() == iterated_residue(spec.m).poly;
    os << (matches ? "generator equals the volume polynomial" : "generator does NOT equal the volume polynomial")
       << '\n';
    if (!matches) status = kPropertyViolation;
  } else if (basis.empty()) {
    os << "expected a nontrivial solution in degree " << *spec.degree << " <= M - r\n";
    status = kPropertyViolation;
  }
  return {status, os.str()};
}

CommandResult run_lift(const ProblemSpec& spec, const RunOptions& options) {
  if (spec.m.rank() < 2) throw InputError("lift: rank must be at least 2");
  std::ostringstream os;
  const VolumePolynomial prev = iterated_residue(spec.m.sub_matrix());
  const VolumePolynomial lifted = lift_volume(prev, spec.m);
  const VolumePolynomial direct = iterated_residue(spec.m);
  // v' is printed in the rank-r variables a2..ar.
  os << "v' = " << render_poly(embed(prev.poly, static_cast<std::size_t>(spec.m.rank()), 1), options) << '\n';
  os << "lifted v = " << render_poly(lifted.poly, options) << '\n';
  if (lifted.poly == direct.poly) {
    os << "lift agrees with the iterated residue\n";
    return {kSuccess, os.str()};
  }
  os << "lift DISAGREES with the iterated residue " << render_poly(direct.poly, options) << '\n';
  return {kPropertyViolation, os.str()};
}

CommandResult run_oracle(const ProblemSpec& spec) {
  const AVector a = integer_point(spec);
  const int bound = spec.dilations.value_or(-1);
  if (spec.dilations && *spec.dilations < spec.m.degree()) {
    throw InputError("oracle-compare: dilations must be at least M - r = " + std::to_string(spec.m.degree()));
  }
  const VolumeComparison cmp = compare_volume(spec.m, a, bound);
  return {cmp.agree() ? kSuccess : kPropertyViolation, render(cmp)};
}

CommandResult run_corner(const ProblemSpec& spec) {
  std::ostringstream os;
  const VolumePolynomial v = iterated_residue(spec.m);
  const Exponents corner = corner_exponents(spec.m);
  const Rational got = v.poly.coefficient(corner);
  const Rational want = expected_corner_coefficient(spec.m);
  os << "corner monomial: " << to_string(MultiPoly::monomial(corner)) << '\n';
  os << "coefficient: " << to_string(got) << '\n';
  os << "expected: " << to_string(want) << '\n';
  os << (got == want ? "corner coefficient matches" : "corner coefficient MISMATCH") << '\n';
  return {got == want ? kSuccess : kPropertyViolation, os.str()};
}

}  // namespace

ProblemSpec parse_spec(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  RawSpec raw;
  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string_view item = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("spec: expected key=value in '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);

    if (key == "r") {
      if (raw.rank) throw InputError("spec: rank given twice");
      raw.rank = parse_int(value, "r");
    } else if (key.starts_with("m[") && key.ends_with("]")) {
      const std::string_view inner = key.substr(2, key.size() - 3);
      const auto comma = inner.find(',');
      if (comma == std::string_view::npos) throw InputError("spec: malformed index in '" + std::string(key) + "'");
      set_entry(raw, parse_int(inner.substr(0, comma), "root index"), parse_int(inner.substr(comma + 1), "root index"),
                parse_int(value, key));
    } else if (key == "a") {
      if (raw.a) throw InputError("spec: a given twice");
      if (value.size() < 2 || value.front() != '(' || value.back() != ')') {
        throw InputError("spec: a must be written as (v1,...,vr)");
      }
      std::vector<Rational> point;
      std::string_view body = value.substr(1, value.size() - 2);
      while (!body.empty()) {
        const auto comma = body.find(',');
        point.push_back(parse_rat(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
        if (body.empty()) throw InputError("spec: trailing comma in a");
      }
      raw.a = std::move(point);
    } else if (key == "degree") {
      raw.degree = parse_int(value, "degree");
    } else if (key == "dilations") {
      raw.dilations = parse_int(value, "dilations");
    } else {
      throw InputError("spec: unknown key '" + std::string(key) + "'");
    }
  }
  return finish(raw);
}

ProblemSpec parse_spec_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("spec: JSON spec must be an object");

  auto as_int = [](const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw InputError("spec: " + what + " must be an integer");
    return v.get<int>();
  };

  RawSpec raw;
  for (const auto& [key, value] : doc.items()) {
    if (key == "r") {
      raw.rank = as_int(value, "r");
    } else if (key == "m") {
      if (!value.is_object()) throw InputError("spec: m must be an object of \"i,j\": value pairs");
      for (const auto& [idx, mult] : value.items()) {
        const auto comma = idx.find(',');
        if (comma == std::string::npos) throw InputError("spec: malformed index '" + idx + "'");
        set_entry(raw, parse_int(std::string_view(idx).substr(0, comma), "root index"),
                  parse_int(std::string_view(idx).substr(comma + 1), "root index"), as_int(mult, "m[" + idx + "]"));
      }
    } else if (key == "a") {
      if (!value.is_array()) throw InputError("spec: a must be an array");
      std::vector<Rational> point;
      for (const auto& v : value) {
        if (v.is_number_integer()) {
          point.emplace_back(v.get<long>());
        } else if (v.is_string()) {
          point.push_back(parse_rat(v.get<std::string>()));
        } else {
          throw InputError("spec: entries of a must be integers or rational strings");
        }
      }
      raw.a = std::move(point);
    } else if (key == "degree") {
      raw.degree = as_int(value, "degree");
    } else if (key == "dilations") {
      raw.dilations = as_int(value, "dilations");
    } else {
      throw InputError("spec: unknown key '" + key + "'");
    }
  }
  return finish(raw);
}

std::string render_spec(const ProblemSpec& spec) {
  const int r = spec.m.rank();
  std::string out = "r=" + std::to_string(r);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      out += "; m[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]=" + std::to_string(spec.m(i, j));
    }
  }
  if (spec.a) out += "; a=" + render_point(*spec.a);
  if (spec.degree) out += "; degree=" + std::to_string(*spec.degree);
  if (spec.dilations) out += "; dilations=" + std::to_string(*spec.dilations);
  return out;
}

Command parse_command(std::string_view name) {
  if (name == "volume") return Command::Volume;
  if (name == "check-pde") return Command::CheckPde;
  if (name == "kernel") return Command::Kernel;
  if (name == "lift") return Command::Lift;
  if (name == "oracle-compare") return Command::OracleCompare;
  if (name == "corner") return Command::Corner;
  throw InputError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Volume: return "volume";
    case Command::CheckPde: return "check-pde";
    case Command::Kernel: return "kernel";
    case Command::Lift: return "lift";
    case Command::OracleCompare: return "oracle-compare";
    case Command::Corner: return "corner";
  }
  return "unknown";
}

CommandResult run_command(const ProblemSpec& spec, Command command, const RunOptions& options) {
  switch (command) {
    case Command::Volume: return run_volume(spec, options);
    case Command::CheckPde: return run_check_pde(spec, options);
    case Command::Kernel: return run_kernel(spec, options);
    case Command::Lift: return run_lift(spec, options);
    case Command::OracleCompare: return run_oracle(spec);
    case Command::Corner: return run_corner(spec);
  }
  throw InputError("unknown command");
}

}  // namespace flowvol
