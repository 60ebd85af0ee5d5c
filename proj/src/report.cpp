// Copyright 2026 The bpfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bpfree/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace bpfree {
namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string quoted(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const std::string& field) {
  return field.find_first_of(",\"\n") == std::string::npos ? field : quoted(field);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string lo_string(const DyadicInterval& x, int digits) { return x.lo().to_decimal(digits, MPFR_RNDD); }
std::string hi_string(const DyadicInterval& x, int digits) { return x.hi().to_decimal(digits, MPFR_RNDU); }

std::string short_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const char* kind_name(BoundKind k) { return k == BoundKind::kUpper ? "upper" : "lower"; }

Json witness_json(const Witness& w) {
  Json j;
  if (const auto* c = std::get_if<Chain>(&w)) {
    j["type"] = "chain";
    j["b"] = format_b_vector(*c);
    j["d"] = format_d_vector(*c);
  } else if (const auto* p = std::get_if<SixfoldProfile>(&w)) {
    j["type"] = "profile";
    j["b"] = format_b_vector(p->chain);
    j["d"] = format_d_vector(p->chain);
    Json m = Json::array();
    for (const auto& v : p->m) m.push_back(integer_json(v));
    j["m"] = m;
  } else {
    const auto& nc = std::get<NonintegralCandidate>(w);
    j["type"] = "curve";
    j["prefix_b"] = format_b_vector(nc.prefix);
    j["prefix_d"] = format_d_vector(nc.prefix);
    j["curve_b"] = "2/" + nc.m.get_str();
    j["curve_d"] = 2;
    j["m"] = integer_json(nc.m);
  }
  return j;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "text") return Format::kText;
  return std::nullopt;
}

int digits_for(unsigned long precision) {
  return std::max(6, static_cast<int>(std::ceil(static_cast<double>(precision) * 0.30103)) + 1);
}

std::string render_table(const std::vector<TableCell>& cells, Format format) {
  if (format == Format::kJson) {
    Json rows = Json::array();
    for (const auto& c : cells) {
      Json row;
      row["n"] = c.n;
      row["r"] = integer_json(c.r);
      row["floor_F"] = integer_json(c.floor);
      row["exact_value"] = c.value.to_string();
      row["witness_b"] = format_b_vector(c.witness);
      row["witness_d"] = format_d_vector(c.witness);
      rows.push_back(std::move(row));
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "table";
    j["cells"] = std::move(rows);
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::kCsv) {
    os << "n,r,floor_F,exact_value,witness_b,witness_d\n";
    for (const auto& c : cells) {
      os << c.n << ',' << c.r << ',' << c.floor << ',' << csv_field(c.value.to_string()) << ','
         << csv_field(format_b_vector(c.witness)) << ',' << csv_field(format_d_vector(c.witness)) << '\n';
    }
    return os.str();
  }
  // Grid: one row per r, one column per n.
  std::vector<std::pair<Integer, std::vector<const TableCell*>>> rows;
  for (const auto& c : cells) {
    if (rows.empty() || rows.back().first != c.r) rows.push_back({c.r, {}});
    rows.back().second.push_back(&c);
  }
  os << "floor F(n, r)\n";
  if (rows.empty()) return os.str();
  os << std::setw(6) << "r \\ n";
  for (const auto* c : rows.front().second) os << std::setw(5) << c->n;
  os << '\n';
  for (const auto& [r, row] : rows) {
    os << std::setw(6) << r.get_str();
    for (const auto* c : row) os << std::setw(5) << c->floor.get_str();
    os << '\n';
  }
  return os.str();
}

std::string render_solve(std::string_view kind, unsigned long n, const Integer& r, const SolveResult& result,
                         Format format) {
  const std::string witness = describe_witness(result.witness);
  const std::string value = result.value.to_string();
  const DyadicInterval enc = result.value.enclose(64);
  if (format == Format::kJson) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "solve_" + std::string(kind);
    j["n"] = n;
    if (kind == "F") j["r"] = integer_json(r);
    j["value"] = value;
    j["floor"] = integer_json(result.floor);
    j["lo"] = lo_string(enc, 20);
    j["hi"] = hi_string(enc, 20);
    j["witness"] = witness_json(result.witness);
    j["states"] = result.stats.states;
    j["candidates"] = result.stats.candidates;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::kCsv) {
    os << "kind,n,r,floor,value,witness,states,candidates\n";
    os << kind << ',' << n << ',' << (kind == "F" ? r.get_str() : std::string()) << ',' << result.floor << ','
       << csv_field(value) << ',' << csv_field(witness) << ',' << result.stats.states << ','
       << result.stats.candidates << '\n';
    return os.str();
  }
  os << kind << "(" << n;
  if (kind == "F") os << ", " << r;
  os << ") = " << value << "\n";
  os << "  enclosure  " << enc.to_string(20) << "\n";
  os << "  floor      " << result.floor << "\n";
  os << "  witness    " << witness << "\n";
  os << "  explored   " << result.stats.states << " states, " << result.stats.candidates << " candidates\n";
  return os.str();
}

std::string render_bounds(const BoundReport& report, Format format) {
  const int digits = digits_for(report.precision);
  if (format == Format::kJson) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bounds";
    j["n"] = report.n;
    j["r"] = integer_json(report.r);
    j["precision"] = report.precision;
    if (report.F) {
      const DyadicInterval enc = report.F->value.enclose(report.precision);
      Json f;
      f["value"] = report.F->value.to_string();
      f["floor"] = integer_json(report.F->floor);
      f["lo"] = lo_string(enc, digits);
      f["hi"] = hi_string(enc, digits);
      f["witness"] = witness_json(report.F->witness);
      j["F"] = std::move(f);
    } else {
      j["F"] = nullptr;
    }
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      Json row;
      row["bound_name"] = e.name;
      row["kind"] = kind_name(e.kind);
      row["lo"] = lo_string(e.enclosure, digits);
      row["hi"] = hi_string(e.enclosure, digits);
      row["exact_part"] = e.value.is_algebraic() ? e.value.exact_part().to_string() : std::string();
      row["dominates_F"] = to_string(e.dominates_F);
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    if (report.construction) {
      const auto& c = *report.construction;
      Json k;
      k["b"] = format_b_vector(c.chain);
      k["d"] = format_d_vector(c.chain);
      k["valid"] = c.violations.empty();
      Json v = Json::array();
      for (const auto& x : c.violations) v.push_back(x.message);
      k["violations"] = std::move(v);
      k["gap_two"] = c.gap_two;
      k["window_holds"] = c.window_holds;
      k["value"] = c.value ? Json(c.value->to_string()) : Json(nullptr);
      k["target_lo"] = lo_string(c.target, digits);
      k["target_hi"] = hi_string(c.target, digits);
      k["meets_target"] = to_string(c.meets_target);
      k["n_at_least_10"] = c.n_at_least_10;
      k["n_at_least_110"] = c.n_at_least_110;
      j["construction"] = std::move(k);
    }
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::kCsv) {
    os << "n,r,bound_name,lo,hi,exact_part,dominates_F\n";
    for (const auto& e : report.entries) {
      os << report.n << ',' << report.r << ',' << e.name << ',' << lo_string(e.enclosure, digits) << ','
         << hi_string(e.enclosure, digits) << ','
         << (e.value.is_algebraic() ? csv_field(e.value.exact_part().to_string()) : std::string()) << ','
         << to_string(e.dominates_F) << '\n';
    }
    return os.str();
  }
  os << "bounds for n = " << report.n << ", r = " << report.r << " (" << report.precision << " bits)\n";
  if (report.F) {
    os << "  F = " << report.F->value << "\n";
    os << "      " << report.F->value.enclose(report.precision).to_string(digits) << ", floor " << report.F->floor
       << "\n";
  } else {
    os << "  F not computed (n above the solve guard)\n";
  }
  for (const auto& e : report.entries) {
    os << "  " << std::left << std::setw(19) << e.name << std::right << kind_name(e.kind) << "  "
       << e.enclosure.to_string(digits) << "  dominates F: " << to_string(e.dominates_F) << "\n";
  }
  if (report.construction) {
    const auto& c = *report.construction;
    os << "  construction " << format_chain(c.chain) << "\n";
    os << "    valid " << (c.violations.empty() ? "yes" : "no") << ", gap >= 2 " << (c.gap_two ? "yes" : "no")
       << ", W window " << (c.window_holds ? "yes" : "no") << "\n";
    os << "    target " << c.target.to_string(digits) << ", met: " << to_string(c.meets_target) << "\n";
    os << "    n >= 10: " << (c.n_at_least_10 ? "yes" : "no") << ", n >= 110: " << (c.n_at_least_110 ? "yes" : "no")
       << "\n";
  }
  return os.str();
}

std::string render_sweep(const std::vector<SweepRow>& rows, const Integer& r, Format format) {
  if (format == Format::kJson) {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["n"] = row.n;
      j["F"] = row.F ? Json(row.F->midpoint()) : Json(nullptr);
      j["young_sum"] = row.young_sum.midpoint();
      j["enlogn_sum"] = row.enlogn_sum.midpoint();
      j["loglog_thm"] = row.loglog_thm.midpoint();
      j["easy_lower"] = row.easy_lower.midpoint();
      out.push_back(std::move(j));
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bounds_sweep";
    j["r"] = integer_json(r);
    j["rows"] = std::move(out);
    return dump(j);
  }
  std::ostringstream os;
  const char sep = format == Format::kCsv ? ',' : '\t';
  os << "n" << sep << "F" << sep << "young_sum" << sep << "enlogn_sum" << sep << "loglog_thm" << sep << "easy_lower\n";
  for (const auto& row : rows) {
    os << row.n << sep << (row.F ? short_number(row.F->midpoint()) : std::string()) << sep
       << short_number(row.young_sum.midpoint()) << sep << short_number(row.enlogn_sum.midpoint()) << sep
       << short_number(row.loglog_thm.midpoint()) << sep << short_number(row.easy_lower.midpoint()) << '\n';
  }
  return os.str();
}

std::string render_lambert_w(std::string_view x, const DyadicInterval& w, unsigned long precision, Format format) {
  const int digits = digits_for(precision);
  if (format == Format::kJson) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "lambert_w";
    j["x"] = std::string(x);
    j["precision"] = precision;
    j["lo"] = lo_string(w, digits);
    j["hi"] = hi_string(w, digits);
    return dump(j);
  }
  if (format == Format::kCsv) {
    return "x,precision,lo,hi\n" + csv_field(std::string(x)) + "," + std::to_string(precision) + "," +
           lo_string(w, digits) + "," + hi_string(w, digits) + "\n";
  }
  return "W(" + std::string(x) + ") in " + w.to_string(digits) + "\n";
}

std::string render_verify(const VerifyReport& report, Format format) {
  if (format == Format::kJson) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json j;
      j["name"] = c.name;
      j["passed"] = c.passed;
      j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "verify";
    j["suite"] = report.suite;
    j["passed"] = report.passed();
    j["checks"] = std::move(checks);
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::kCsv) {
    os << "suite,check,status,detail\n";
    for (const auto& c : report.checks) {
      os << report.suite << ',' << csv_field(c.name) << ',' << (c.passed ? "pass" : "fail") << ','
         << csv_field(c.detail) << '\n';
    }
    return os.str();
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    if (c.passed) ++passed;
  }
  os << report.suite << ": " << passed << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace bpfree
