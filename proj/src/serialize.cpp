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

#include "g2orbit/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace g2orbit {
namespace {

using nlohmann::json;

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool has_imaginary(const std::vector<std::complex<double>>& values) {
  for (const auto& v : values) {
    if (v.imag() != 0.0) return true;
  }
  return false;
}

json values_to_json(const std::vector<std::complex<double>>& values) {
  json out = json::array();
  const bool complex_values = has_imaginary(values);
  for (const auto& v : values) {
    if (complex_values) {
      out.push_back(json::array({v.real(), v.imag()}));
    } else {
      out.push_back(v.real());
    }
  }
  return out;
}

std::vector<std::complex<double>> values_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("\"values\" must be an array");
  std::vector<std::complex<double>> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw std::invalid_argument("values must be numbers or [re, im] pairs");
    }
  }
  return out;
}

int level_from_json(const json& j) {
  if (!j.is_object() || !j.contains("M") || !j["M"].is_number_integer()) {
    throw std::invalid_argument("JSON object needs an integer \"M\"");
  }
  const int M = j["M"].get<int>();
  if (M < 1) throw std::invalid_argument("\"M\" must be >= 1");
  return M;
}

Family family_from_json(const json& j) {
  if (!j.contains("family") || !j["family"].is_string()) {
    throw std::invalid_argument("JSON object needs a string \"family\"");
  }
  return parse_family(j["family"].get<std::string>());
}

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string cell(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(std::move(cell));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& cell) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + cell + "'");
  }
}

// Reads the value/imag columns of a CSV table with a header row.
std::vector<std::complex<double>> csv_values(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = split_line(line);
    break;
  }
  std::size_t value_col = header.size();
  std::size_t imag_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "value") value_col = i;
    if (header[i] == "imag") imag_col = i;
  }
  if (value_col == header.size()) throw std::invalid_argument("CSV needs a \"value\" column");
  std::vector<std::complex<double>> out;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) throw std::invalid_argument("CSV row has wrong column count");
    const double im = imag_col < cells.size() ? parse_double(cells[imag_col]) : 0.0;
    out.emplace_back(parse_double(cells[value_col]), im);
  }
  return out;
}

void append_value_cells(std::ostringstream& os, const std::complex<double>& v, bool complex_values) {
  os << ',' << format_double(v.real());
  if (complex_values) os << ',' << format_double(v.imag());
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json grid_to_json(const Grid& grid) {
  json points = json::array();
  for (const KacPoint& s : grid.points()) points.push_back({s.s0, s.s1, s.s2});
  return {{"M", grid.level()}, {"points", points}, {"weights", grid.weights()}};
}

Grid grid_from_json(const json& j) {
  Grid grid(level_from_json(j));
  if (!j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument("grid JSON needs \"points\"");
  }
  const json& points = j["points"];
  if (points.size() != grid.size()) throw std::invalid_argument("grid JSON has the wrong point count");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto kac = points[i].get<std::vector<int>>();
    if (kac.size() != 3 || KacPoint{kac[0], kac[1], kac[2]} != grid.points()[i]) {
      throw std::invalid_argument("grid JSON point " + std::to_string(i) + " does not match F_M");
    }
  }
  if (j.contains("weights") && j["weights"].get<std::vector<int>>() != grid.weights()) {
    throw std::invalid_argument("grid JSON weights do not match c_s");
  }
  return grid;
}

std::string grid_to_csv(const Grid& grid) {
  std::ostringstream os;
  os << "s0,s1,s2,x1,x2,c\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const KacPoint& s = grid.points()[i];
    const Point p = s.real_point();
    os << s.s0 << ',' << s.s1 << ',' << s.s2 << ',' << format_double(p.x1) << ','
       << format_double(p.x2) << ',' << grid.weights()[i] << '\n';
  }
  return os.str();
}

json spectrum_to_json(const Spectrum& spec) {
  json entries = json::array();
  for (const SpectrumEntry& e : spec.entries) {
    entries.push_back({e.weight.a, e.weight.b, rational_text(e.norm)});
  }
  return {{"M", spec.level}, {"family", to_string(spec.family)}, {"entries", entries}};
}

std::string spectrum_to_csv(const Spectrum& spec) {
  std::ostringstream os;
  os << "a,b,h\n";
  for (const SpectrumEntry& e : spec.entries) {
    os << e.weight.a << ',' << e.weight.b << ',' << rational_text(e.norm) << '\n';
  }
  return os.str();
}

json field_to_json(const SampledField& f, Family family) {
  return {{"M", f.level}, {"family", to_string(family)}, {"values", values_to_json(f.values)}};
}

SampledField field_from_json(const json& j) {
  SampledField f{level_from_json(j), {}};
  if (!j.contains("values")) throw std::invalid_argument("field JSON needs \"values\"");
  f.values = values_from_json(j["values"]);
  if (f.values.size() != static_cast<std::size_t>(grid_size(f.level))) {
    throw std::invalid_argument("field has " + std::to_string(f.values.size()) +
                                " values, grid F_" + std::to_string(f.level) + " has " +
                                std::to_string(grid_size(f.level)));
  }
  return f;
}

std::string field_to_csv(const SampledField& f) {
  const Grid grid(f.level);
  if (f.values.size() != grid.size()) throw std::invalid_argument("field does not match its grid");
  const bool complex_values = has_imaginary(f.values);
  std::ostringstream os;
  os << "s0,s1,s2,x1,x2,value" << (complex_values ? ",imag" : "") << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const KacPoint& s = grid.points()[i];
    const Point p = s.real_point();
    os << s.s0 << ',' << s.s1 << ',' << s.s2 << ',' << format_double(p.x1) << ','
       << format_double(p.x2);
    append_value_cells(os, f.values[i], complex_values);
    os << '\n';
  }
  return os.str();
}

SampledField field_from_csv(std::string_view text, int M) {
  SampledField f{M, csv_values(text)};
  if (f.values.size() != static_cast<std::size_t>(grid_size(M))) {
    throw std::invalid_argument("field has " + std::to_string(f.values.size()) +
                                " rows, grid F_" + std::to_string(M) + " has " +
                                std::to_string(grid_size(M)));
  }
  return f;
}

json coefficients_to_json(const CoefficientVector& d) {
  return {{"M", d.level}, {"family", to_string(d.family)}, {"values", values_to_json(d.values)}};
}

CoefficientVector coefficients_from_json(const json& j) {
  CoefficientVector d{family_from_json(j), level_from_json(j), {}};
  if (!j.contains("values")) throw std::invalid_argument("coefficient JSON needs \"values\"");
  d.values = values_from_json(j["values"]);
  const std::size_t expected = spectrum(d.family, d.level).size();
  if (d.values.size() != expected) {
    throw std::invalid_argument("coefficient vector has " + std::to_string(d.values.size()) +
                                " values, spectrum has " + std::to_string(expected));
  }
  return d;
}

std::string coefficients_to_csv(const CoefficientVector& d) {
  const Spectrum spec = spectrum(d.family, d.level);
  if (d.values.size() != spec.size()) throw std::invalid_argument("coefficients do not match spectrum");
  const bool complex_values = has_imaginary(d.values);
  std::ostringstream os;
  os << "a,b,h,value" << (complex_values ? ",imag" : "") << '\n';
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const SpectrumEntry& e = spec.entries[i];
    os << e.weight.a << ',' << e.weight.b << ',' << rational_text(e.norm);
    append_value_cells(os, d.values[i], complex_values);
    os << '\n';
  }
  return os.str();
}

CoefficientVector coefficients_from_csv(std::string_view text, Family family, int M) {
  CoefficientVector d{family, M, csv_values(text)};
  const std::size_t expected = spectrum(family, M).size();
  if (d.values.size() != expected) {
    throw std::invalid_argument("coefficient table has " + std::to_string(d.values.size()) +
                                " rows, spectrum has " + std::to_string(expected));
  }
  return d;
}

json orbit_sum_to_json(const OrbitSum& s) {
  json terms = json::array();
  for (const auto& [w, c] : s.terms()) {
    json coeff;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coeff = static_cast<std::int64_t>(c);
    } else {
      coeff = c.str();
    }
    terms.push_back({w.a, w.b, coeff});
  }
  return {{"family", to_string(s.family())}, {"terms", terms}};
}

OrbitSum orbit_sum_from_json(const json& j) {
  OrbitSum out(family_from_json(j));
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("orbit sum JSON needs \"terms\"");
  }
  for (const json& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [a, b, coeff]");
    const Weight w{t[0].get<std::int64_t>(), t[1].get<std::int64_t>()};
    const Coefficient c = t[2].is_string() ? Coefficient(t[2].get<std::string>())
                                           : Coefficient(t[2].get<std::int64_t>());
    out.add(w, c);
  }
  return out;
}

}  // namespace g2orbit
