/*
 * Copyright 2026 The g2orbit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2orbit/algebra.hpp"
#include "g2orbit/arith.hpp"
#include "g2orbit/serialize.hpp"

namespace g2orbit::cli {
namespace {

using nlohmann::json;

/// Bad user input detected after parsing; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numerical self-check exceeded the tolerance; maps to exit code 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool structured(const Config& cfg) { return cfg.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

bool looks_like_json(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && (text[pos] == '{' || text[pos] == '[');
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

Family family_arg(const std::string& text) {
  try {
    return parse_family(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown family '" + text + "' (expected C, S, SL or SS)");
  }
}

Weight dominant_arg(std::int64_t a, std::int64_t b) {
  const Weight w{a, b};
  if (!w.dominant()) {
    throw UsageError("weight (" + std::to_string(a) + "," + std::to_string(b) + ") is not dominant");
  }
  return w;
}

std::int64_t integer_arg(const std::string& text) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

int level_arg(const std::string& text) {
  const std::int64_t M = integer_arg(text);
  if (M < 1 || M > 100000) throw UsageError("level must be between 1 and 100000");
  return static_cast<int>(M);
}

/// Plain-text rendering: values within tol of an integer print as integers.
std::string text_number(double v, double tol) {
  const double r = std::round(v);
  if (std::abs(v - r) <= tol) return format_double(r == 0.0 ? 0.0 : r);
  return format_double(v);
}

std::string text_complex(std::complex<double> z, double tol) {
  const std::string im = text_number(std::abs(z.imag()), tol);
  return text_number(z.real(), tol) + (z.imag() < 0 && im != "0" ? "-" : "+") + im + "i";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fraction_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string family;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::string> point;
  int grid = 0;
};

int cmd_eval(const Config& cfg, const EvalArgs& args, std::ostream& out) {
  const Family f = family_arg(args.family);
  const Weight l = dominant_arg(args.a, args.b);

  if (args.grid > 0) {
    if (!args.point.empty()) throw UsageError("give either a point or --grid, not both");
    const Grid grid(args.grid);
    const SampledField field = sample(f, l, grid);
    out << (structured(cfg) ? dump(field_to_json(field, f)) : field_to_csv(field));
    return kOk;
  }
  if (args.point.size() != 2) throw UsageError("eval needs a point x1 x2 or --grid M");

  const Point p{parse_coordinate(args.point[0]), parse_coordinate(args.point[1])};
  const FunctionValue v = evaluate(f, l, p);
  if (cfg.format == "json") {
    out << dump({{"family", to_string(f)},
                 {"weight", {l.a, l.b}},
                 {"point", {p.x1, p.x2}},
                 {"value", {v.value.real(), v.value.imag()}},
                 {"real", v.real()}});
  } else if (cfg.format == "csv") {
    out << "family,a,b,x1,x2,re,im,real\n"
        << to_string(f) << ',' << l.a << ',' << l.b << ',' << format_double(p.x1) << ','
        << format_double(p.x2) << ',' << format_double(v.value.real()) << ','
        << format_double(v.value.imag()) << ',' << format_double(v.real()) << '\n';
  } else {
    out << "real: " << text_number(v.real(), cfg.tol) << '\n'
        << "complex: " << text_complex(v.value, cfg.tol) << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------- transform

struct TransformArgs {
  std::string family;
  std::string level;
  std::string forward_file;
  std::string inverse_file;
  std::string output;
  bool random = false;
  bool roundtrip = false;
};

SampledField read_field(const std::string& text, Family f, int M) {
  if (!looks_like_json(text)) return field_from_csv(text, M);
  const json j = parse_json(text);
  const SampledField field = field_from_json(j);
  if (field.level != M) throw UsageError("field level does not match M");
  if (j.contains("family") && family_arg(j["family"].get<std::string>()) != f) {
    throw UsageError("field family does not match");
  }
  return field;
}

CoefficientVector read_coefficients(const std::string& text, Family f, int M) {
  if (!looks_like_json(text)) return coefficients_from_csv(text, f, M);
  const CoefficientVector d = coefficients_from_json(parse_json(text));
  if (d.family != f || d.level != M) throw UsageError("coefficient family or level does not match");
  return d;
}

SampledField random_field(const Transform& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  SampledField f{t.level(), {}};
  for (const KacPoint& s : t.grid().points()) {
    f.values.emplace_back(vanishes_at(t.family(), s) ? 0.0 : n(rng));
  }
  return f;
}

double max_error(const std::vector<std::complex<double>>& u, const std::vector<std::complex<double>>& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
  return m;
}

double max_abs(const std::vector<std::complex<double>>& u) {
  double m = 0.0;
  for (const auto& z : u) m = std::max(m, std::abs(z));
  return m;
}

int cmd_transform(const Config& cfg, const TransformArgs& args, std::ostream& out) {
  const Family f = family_arg(args.family);
  const int M = level_arg(args.level);
  const int sources = !args.forward_file.empty() + !args.inverse_file.empty() + args.random;
  if (sources != 1) throw UsageError("give exactly one of --forward FILE, --inverse FILE, --random");

  const Transform t(f, M, args.roundtrip);
  std::string data;
  double error = 0.0;
  double scale = 0.0;
  if (args.inverse_file.empty()) {
    const SampledField field =
        args.random ? random_field(t, cfg.seed) : read_field(read_file(args.forward_file), f, M);
    const CoefficientVector d = t.forward(field);
    data = structured(cfg) ? dump(coefficients_to_json(d)) : coefficients_to_csv(d);
    if (args.roundtrip) {
      error = max_error(t.inverse(d).values, field.values);
      scale = max_abs(field.values);
    }
  } else {
    const CoefficientVector d = read_coefficients(read_file(args.inverse_file), f, M);
    const SampledField field = t.inverse(d);
    data = structured(cfg) ? dump(field_to_json(field, f)) : field_to_csv(field);
    if (args.roundtrip) {
      error = max_error(t.forward(field).values, d.values);
      scale = max_abs(d.values);
    }
  }

  if (!args.roundtrip) {
    write_text(data, args.output, out);
    return kOk;
  }
  if (!args.output.empty()) write_text(data, args.output, out);
  if (structured(cfg)) {
    out << dump({{"roundtrip_max_error", error}});
  } else {
    out << "roundtrip max error: " << format_double(error) << '\n';
  }
  if (error > cfg.tol * std::max(1.0, scale)) {
    throw CheckFailure("round trip error " + format_double(error) + " exceeds tolerance");
  }
  return kOk;
}

// ----------------------------------------------------------- decompose

struct DecomposeArgs {
  std::vector<std::string> operands;
  int check = 0;
};

std::string orbit_sum_csv(const OrbitSum& s) {
  std::ostringstream os;
  os << "family,a,b,coefficient\n";
  for (const auto& [w, c] : s.terms()) os << to_string(s.family()) << ',' << w.a << ',' << w.b << ',' << c << '\n';
  return os.str();
}

int cmd_decompose(const Config& cfg, const DecomposeArgs& args, std::ostream& out) {
  if (args.operands.size() != 6) throw UsageError("decompose needs FAMILY a b FAMILY c d");
  const Family fa = family_arg(args.operands[0]);
  const Weight la = dominant_arg(integer_arg(args.operands[1]), integer_arg(args.operands[2]));
  const Family fb = family_arg(args.operands[3]);
  const Weight lb = dominant_arg(integer_arg(args.operands[4]), integer_arg(args.operands[5]));
  if (args.check < 0) throw UsageError("--check needs a non-negative count");

  const OrbitSum s = expand_product(fa, la, fb, lb);

  double worst = 0.0;
  if (args.check > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < args.check; ++i) {
      const Point p{u(rng), u(rng)};
      const std::complex<double> lhs = evaluate(fa, la, p).value * evaluate(fb, lb, p).value;
      worst = std::max(worst, std::abs(lhs - s.evaluate(p)) / (1.0 + std::abs(lhs)));
    }
  }

  if (cfg.format == "json") {
    json j = orbit_sum_to_json(s);
    j["lhs"] = {term_label(fa, la), term_label(fb, lb)};
    if (args.check > 0) j["check"] = {{"points", args.check}, {"max_error", worst}};
    out << dump(j);
  } else if (cfg.format == "csv") {
    out << orbit_sum_csv(s);
  } else if (cfg.format == "latex") {
    OrbitSum left_a(fa);
    OrbitSum left_b(fb);
    if (is_admissible(fa, la)) left_a.add(la, 1);
    if (is_admissible(fb, lb)) left_b.add(lb, 1);
    out << left_a.to_latex() << ' ' << left_b.to_latex() << " = " << s.to_latex() << '\n';
  } else {
    out << s.to_text() << '\n';
  }
  if (args.check > 0 && cfg.format != "json") {
    out << "check: " << args.check << " points, max relative error " << format_double(worst) << '\n';
  }
  if (worst > cfg.tol) throw CheckFailure("numerical check failed");
  return kOk;
}

// -------------------------------------------------------------- tables

struct TablesArgs {
  bool rational = false;
  std::string grid;
  std::vector<std::string> spectrum;
  std::vector<std::string> character;
  std::vector<std::string> inner;
};

std::string rational_latex(const RationalTable& t) {
  std::ostringstream os;
  os << "\\begin{tabular}{l" << std::string(t.columns.size(), 'r') << "}\n$M$";
  for (const auto& e : t.columns) os << " & " << e.order();
  os << " \\\\\n$[s_0,s_1,s_2]$";
  for (const auto& e : t.columns) os << " & $[" << e.kac.s0 << ',' << e.kac.s1 << ',' << e.kac.s2 << "]$";
  os << " \\\\\n\\hline\n";
  for (const auto& row : t.rows) {
    const std::string& l = row.label;
    const auto paren = l.find('(');
    const std::string head = l.substr(0, paren);
    const std::string sub = l.substr(paren);
    std::string symbol = head == "chi" ? "\\chi" : head == "chiL" ? "\\chi^L" : head == "chiS" ? "\\chi^S" : head;
    os << '$' << symbol << "_{" << sub << "}$";
    for (long long v : row.values) os << " & " << v;
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

json rational_json(const RationalTable& t) {
  json cols = json::array();
  for (const auto& e : t.columns) {
    cols.push_back({{"M", e.order()}, {"kac", {e.kac.s0, e.kac.s1, e.kac.s2}}});
  }
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"label", r.label}, {"values", r.values}});
  return {{"columns", cols}, {"rows", rows}};
}

int cmd_tables(const Config& cfg, const TablesArgs& args, std::ostream& out) {
  const int chosen = args.rational + !args.grid.empty() + !args.spectrum.empty() + !args.character.empty() +
                     !args.inner.empty();
  if (chosen != 1) throw UsageError("give exactly one of --rational, --grid, --spectrum, --char, --inner");

  if (args.rational) {
    const RationalTable t = rational_table();
    if (cfg.format == "json") {
      out << dump(rational_json(t));
    } else if (cfg.format == "latex") {
      out << rational_latex(t);
    } else {
      out << t.to_csv();
    }
    return kOk;
  }
  if (!args.grid.empty()) {
    const Grid g(level_arg(args.grid));
    out << (structured(cfg) ? dump(grid_to_json(g)) : grid_to_csv(g));
    return kOk;
  }
  if (!args.spectrum.empty()) {
    const Spectrum s = spectrum(family_arg(args.spectrum[0]), level_arg(args.spectrum[1]));
    out << (structured(cfg) ? dump(spectrum_to_json(s)) : spectrum_to_csv(s));
    return kOk;
  }
  if (!args.character.empty()) {
    CharVariant v{};
    try {
      v = parse_char_variant(args.character[0]);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown character variant '" + args.character[0] + "' (expected full, L or S)");
    }
    const Weight l = dominant_arg(integer_arg(args.character[1]), integer_arg(args.character[2]));
    const OrbitSum s = expand_char_in_C(v, l);
    if (cfg.format == "json") {
      json j = orbit_sum_to_json(s);
      j["variant"] = to_string(v);
      j["weight"] = {l.a, l.b};
      out << dump(j);
    } else if (cfg.format == "csv") {
      out << orbit_sum_csv(s);
    } else if (cfg.format == "latex") {
      out << s.to_latex() << '\n';
    } else {
      out << s.to_text() << '\n';
    }
    return kOk;
  }
  const Family fa = family_arg(args.inner[0]);
  const Weight la = dominant_arg(integer_arg(args.inner[1]), integer_arg(args.inner[2]));
  const Family fb = family_arg(args.inner[3]);
  const Weight lb = dominant_arg(integer_arg(args.inner[4]), integer_arg(args.inner[5]));
  const double v = continuous_inner(fa, la, fb, lb, cfg.quad_order);
  if (cfg.format == "json") {
    out << dump({{"inner", v}, {"order", cfg.quad_order}});
  } else {
    out << format_double(v) << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- efo

struct EfoArgs {
  std::string level;
  std::vector<std::string> power;
  int scan_max = 12;
  std::string search_family;
  std::vector<std::string> search_weights;
  int search_bound = 8;
};

json efo_json(const FiniteOrderElement& e) {
  const Point p = e.kac.real_point();
  return {{"M", e.order()},
          {"kac", {e.kac.s0, e.kac.s1, e.kac.s2}},
          {"point", {p.x1, p.x2}},
          {"rational", is_rational(e)}};
}

std::string efo_rows(const std::vector<FiniteOrderElement>& list, const Config& cfg) {
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& e : list) arr.push_back(efo_json(e));
    return dump(arr);
  }
  std::ostringstream os;
  os << "M,s0,s1,s2,x1,x2,rational\n";
  for (const auto& e : list) {
    const RationalPoint p = e.kac.point();
    os << e.order() << ',' << e.kac.s0 << ',' << e.kac.s1 << ',' << e.kac.s2 << ',' << fraction_text(p.x1) << ','
       << fraction_text(p.x2) << ',' << (is_rational(e) ? "yes" : "no") << '\n';
  }
  return os.str();
}

int cmd_efo_list(const Config& cfg, const EfoArgs& args, std::ostream& out) {
  out << efo_rows(enumerate_efo(level_arg(args.level)), cfg);
  return kOk;
}

int cmd_efo_power(const Config& cfg, const EfoArgs& args, std::ostream& out) {
  if (args.power.size() != 4) throw UsageError("power needs s0 s1 s2 k");
  std::array<int, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::int64_t x = integer_arg(args.power[i]);
    if (x < 0 || x > 100000) throw UsageError("power arguments must be between 0 and 100000");
    v[i] = static_cast<int>(x);
  }
  const FiniteOrderElement e = FiniteOrderElement::make(KacPoint::make(v[0], v[1], v[2]));
  if (v[3] < 1) throw UsageError("power exponent must be >= 1");
  const KacPoint k = power_class(e, v[3]);
  if (cfg.format == "json") {
    out << dump({{"kac", {k.s0, k.s1, k.s2}}, {"M", k.level()}});
  } else {
    out << '[' << k.s0 << ',' << k.s1 << ',' << k.s2 << "] M=" << k.level() << '\n';
  }
  return kOk;
}

int cmd_efo_scan(const Config& cfg, const EfoArgs& args, std::ostream& out) {
  if (args.scan_max < 1 || args.scan_max > 1000) throw UsageError("scan bound must be between 1 and 1000");
  out << efo_rows(rational_elements(args.scan_max), cfg);
  return kOk;
}

Weight weight_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("weight must be written a,b");
  return dominant_arg(integer_arg(text.substr(0, comma)), integer_arg(text.substr(comma + 1)));
}

int cmd_efo_search(const Config& cfg, const EfoArgs& args, std::ostream& out) {
  const Family f = family_arg(args.search_family);
  std::vector<Weight> weights;
  for (const auto& w : args.search_weights) weights.push_back(weight_pair(w));
  if (args.search_bound < 1 || args.search_bound > 200) throw UsageError("bound must be between 1 and 200");
  const auto points = search_integer_points(f, weights, args.search_bound);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& p : points) {
      const KacPoint k = kac_from_point(p);
      arr.push_back({{"kac", {k.s0, k.s1, k.s2}}, {"M", k.level()}});
    }
    out << dump(arr);
    return kOk;
  }
  out << "M,s0,s1,s2,x1,x2\n";
  for (const auto& p : points) {
    const KacPoint k = kac_from_point(p);
    out << k.level() << ',' << k.s0 << ',' << k.s1 << ',' << k.s2 << ',' << fraction_text(p.x1) << ','
        << fraction_text(p.x2) << '\n';
  }
  return kOk;
}

}  // namespace

double parse_coordinate(const std::string& text) {
  const auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("not a coordinate: '" + text + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return number(text);
  const double den = number(std::string_view(text).substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return number(std::string_view(text).substr(0, slash)) / den;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit functions of G2: evaluation, grids, transforms and decompositions.", "g2orbit"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text", "latex"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random fields and checks")->capture_default_str();
  app.add_option("--quad-order", cfg.quad_order, "Gauss-Legendre order for continuous products")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Tolerance for numerical checks and integer display")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an orbit function at a point or on a grid");
  eval_cmd->add_option("family", eval.family, "C, S, SL or SS")->required();
  eval_cmd->add_option("a", eval.a, "First weight coordinate")->required();
  eval_cmd->add_option("b", eval.b, "Second weight coordinate")->required();
  eval_cmd->add_option("point", eval.point, "x1 x2 (decimals or fractions)")->expected(0, 2);
  eval_cmd->add_option("--grid", eval.grid, "Sample on the grid F_M instead")->check(CLI::Range(1, 100000));

  TransformArgs tr;
  auto* tr_cmd = app.add_subcommand("transform", "Forward or inverse transform on F_M");
  tr_cmd->add_option("family", tr.family, "C, S, SL or SS")->required();
  tr_cmd->add_option("M", tr.level, "Grid level")->required();
  tr_cmd->add_option("--forward", tr.forward_file, "Sampled field (JSON or CSV)")->check(CLI::ExistingFile);
  tr_cmd->add_option("--inverse", tr.inverse_file, "Coefficient vector (JSON or CSV)")->check(CLI::ExistingFile);
  tr_cmd->add_flag("--random", tr.random, "Forward-transform a random field supported on the family");
  tr_cmd->add_option("--output,-o", tr.output, "Write the result here instead of stdout");
  tr_cmd->add_flag("--roundtrip", tr.roundtrip, "Report the maximal reconstruction error");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose a product of two orbit functions");
  dec_cmd->add_option("operands", dec.operands, "FAMILY a b FAMILY c d")->expected(6)->required();
  dec_cmd->add_option("--check", dec.check, "Verify numerically at this many random points");

  TablesArgs tab;
  auto* tab_cmd = app.add_subcommand("tables", "Grids, spectra, character expansions and rational classes");
  tab_cmd->add_flag("--rational", tab.rational, "Low functions at the rational classes");
  tab_cmd->add_option("--grid", tab.grid, "Points and weights of F_M");
  tab_cmd->add_option("--spectrum", tab.spectrum, "FAMILY M: spectrum and norm factors")->expected(2);
  tab_cmd->add_option("--char", tab.character, "VARIANT a b: character in the C basis")->expected(3);
  tab_cmd->add_option("--inner", tab.inner, "FAMILY a b FAMILY c d: continuous scalar product")->expected(6);

  EfoArgs efo;
  auto* efo_cmd = app.add_subcommand("efo", "Elements of finite order");
  efo_cmd->require_subcommand(1);
  auto* efo_list = efo_cmd->add_subcommand("list", "All elements of order M");
  efo_list->add_option("M", efo.level, "Order")->required();
  auto* efo_power = efo_cmd->add_subcommand("power", "Class of the k-th power");
  efo_power->add_option("args", efo.power, "s0 s1 s2 k")->expected(4)->required();
  auto* efo_scan = efo_cmd->add_subcommand("scan", "Rational classes up to an order");
  efo_scan->add_option("max", efo.scan_max, "Largest order")->capture_default_str();
  auto* efo_search = efo_cmd->add_subcommand("search", "Points where listed functions are integers");
  efo_search->add_option("family", efo.search_family, "C, S, SL or SS")->required();
  efo_search->add_option("--weight,-w", efo.search_weights, "Weight a,b (repeatable)");
  efo_search->add_option("--bound", efo.search_bound, "Largest Kac level")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(cfg, eval, out);
    if (tr_cmd->parsed()) return cmd_transform(cfg, tr, out);
    if (dec_cmd->parsed()) return cmd_decompose(cfg, dec, out);
    if (tab_cmd->parsed()) return cmd_tables(cfg, tab, out);
    if (efo_list->parsed()) return cmd_efo_list(cfg, efo, out);
    if (efo_power->parsed()) return cmd_efo_power(cfg, efo, out);
    if (efo_scan->parsed()) return cmd_efo_scan(cfg, efo, out);
    if (efo_search->parsed()) return cmd_efo_search(cfg, efo, out);
    err << "error: no command\n";
    return kUsage;
  } catch (const CheckFailure& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace g2orbit::cli
