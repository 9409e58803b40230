#include "coxlat/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

namespace coxlat::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

bool contains_factor(const CoxeterType& t, Family family, int rank) {
  return std::any_of(t.factors.begin(), t.factors.end(),
                     [&](const Factor& f) { return f.family == family && f.rank == rank; });
}

// ---- value rendering -------------------------------------------------------

Json json_integer(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_rational(const Rational& v) {
  if (v.get_den() == 1) return json_integer(v.get_num());
  return Json(v.get_str());
}

Json json_poly(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(json_integer(c));
  return arr;
}

Json json_poly(const RatPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(json_rational(c));
  return arr;
}

Json json_value(const IdentityValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return json_rational(x);
        } else if constexpr (std::is_same_v<T, RatPolynomial>) {
          return json_poly(x);
        } else {
          Json arr = Json::array();
          for (const auto& r : x) arr.push_back(json_rational(r));
          return arr;
        }
      },
      v);
}

std::string poly_text(const IntPolynomial& p) { return to_factored_string(p, "t"); }

std::string poly_text(const RatPolynomial& p) {
  if (is_integral(p)) return poly_text(to_integer(p));
  return p.to_string("t");
}

std::string value_text(const IdentityValue& v, std::size_t limit) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return x.get_str();
        } else if constexpr (std::is_same_v<T, RatPolynomial>) {
          return poly_text(x);
        } else {
          std::string out = "[";
          for (std::size_t i = 0; i < x.size() && i < limit; ++i) out += (i ? ", " : "") + x[i].get_str();
          if (x.size() > limit) out += ", ... (" + std::to_string(x.size()) + " values)";
          return out + "]";
        }
      },
      v);
}

Json json_subset(SubsetMask k) {
  Json arr = Json::array();
  for (int i : subset_indices(k)) arr.push_back(i + 1);
  return arr;
}

Json json_row(const OrbitRow& row) {
  Json j;
  j["representative"] = json_subset(row.representative);
  j["type_label"] = row.type_label;
  j["lambda_size"] = row.lambda_size;
  j["rhs_value"] = json_rational(row.rhs_value);
  j["normalizer_index"] = row.normalizer_index;
  j["chi_fix"] = json_poly(row.chi_fix);
  j["chi_fix_text"] = poly_text(row.chi_fix);
  j["match"] = row.match;
  return j;
}

Json json_report(const IdentityReport& r) {
  Json j;
  j["name"] = r.name;
  j["holds"] = r.holds;
  j["lhs"] = json_value(r.lhs);
  j["rhs"] = json_value(r.rhs);
  if (!r.rows.empty()) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(json_row(row));
    j["rows"] = rows;
  }
  Json flags = Json::object();
  for (const auto& [name, value] : r.flags) flags[name] = value;
  j["flags"] = flags;
  j["mismatches"] = r.mismatches;
  j["note"] = r.note;
  j["timing_ms"] = r.timing_ms ? Json(static_cast<std::int64_t>(*r.timing_ms)) : Json(nullptr);
  return j;
}

Json json_header(const RunConfig& config, const std::string& command) {
  Json j;
  j["schema_version"] = 1;
  j["type"] = config.type.name();
  j["command"] = command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- text tables -----------------------------------------------------------

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string render_table(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - display_width(row[c]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> orbit_table(const std::vector<OrbitRow>& rows) {
  std::vector<std::vector<std::string>> t{{"K", "type", "|lambda(K)|", "rhs", "|W|/|N|", "chi(L^Fix(W_K), t)", "match"}};
  for (const auto& row : rows) {
    t.push_back({subset_to_string(row.representative), row.type_label, std::to_string(row.lambda_size),
                 row.rhs_value.get_str(), std::to_string(row.normalizer_index), poly_text(row.chi_fix),
                 row.match ? "yes" : "NO"});
  }
  return t;
}

std::string type_summary(const Analysis& a) {
  std::ostringstream os;
  os << "type " << a.type().name() << "  rank " << a.rank() << "  |W| = " << a.group().order()
     << "  positive roots " << a.roots().positive_count << "  lattice nodes " << a.lattice().size() << "\n";
  return os.str();
}

// ---- CSV -------------------------------------------------------------------

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_quote(fields[i]);
  return out + "\n";
}

std::string csv_value(const IdentityValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return x.get_str();
        } else if constexpr (std::is_same_v<T, RatPolynomial>) {
          return poly_text(x);
        } else {
          std::string out;
          for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ";" : "") + x[i].get_str();
          return out;
        }
      },
      v);
}

std::string csv_orbit_rows(const std::vector<OrbitRow>& rows) {
  std::string out = csv_line({"representative", "type_label", "lambda_size", "rhs_value", "normalizer_index", "chi_fix", "match"});
  for (const auto& row : rows) {
    out += csv_line({subset_to_string(row.representative), row.type_label, std::to_string(row.lambda_size),
                     row.rhs_value.get_str(), std::to_string(row.normalizer_index), poly_text(row.chi_fix),
                     row.match ? "true" : "false"});
  }
  return out;
}

// ---- commands --------------------------------------------------------------

std::vector<OrbitRow> orbit_rows(const Analysis& a) { return verify_theorem1(a).rows; }

std::string render_orbits(const RunConfig& config, const Analysis& a, std::optional<double> total_ms) {
  const auto rows = orbit_rows(a);
  switch (config.output) {
    case OutputFormat::Json: {
      Json j = json_header(config, "orbits");
      Json arr = Json::array();
      for (const auto& row : rows) arr.push_back(json_row(row));
      j["orbits"] = arr;
      j["timing_ms"] = total_ms ? Json(static_cast<std::int64_t>(*total_ms)) : Json(nullptr);
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_orbit_rows(rows);
    case OutputFormat::Table:
      break;
  }
  return type_summary(a) + "\n" + render_table(orbit_table(rows), "");
}

struct LatticeSummary {
  std::size_t nodes = 0;
  std::vector<std::size_t> by_dim;
  IntPolynomial chi;
  std::vector<long> exponents;
  std::vector<long> degrees;
};

std::string render_lattice(const RunConfig& config, const LatticeSummary& s, std::optional<double> total_ms) {
  auto join = [](const auto& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  switch (config.output) {
    case OutputFormat::Json: {
      Json j = json_header(config, "lattice");
      j["nodes"] = s.nodes;
      j["nodes_by_dim"] = s.by_dim;
      j["chi"] = json_poly(s.chi);
      j["chi_text"] = poly_text(s.chi);
      j["exponents"] = s.exponents;
      j["degrees"] = s.degrees;
      j["timing_ms"] = total_ms ? Json(static_cast<std::int64_t>(*total_ms)) : Json(nullptr);
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_line({"type", "nodes", "nodes_by_dim", "chi", "exponents", "degrees"}) +
             csv_line({config.type.name(), std::to_string(s.nodes), join(s.by_dim), poly_text(s.chi), join(s.exponents),
                       join(s.degrees)});
    case OutputFormat::Table:
      break;
  }
  return render_table({{"type", config.type.name()},
                       {"nodes", std::to_string(s.nodes)},
                       {"nodes by dimension", join(s.by_dim)},
                       {"chi(L, t)", poly_text(s.chi)},
                       {"exponents", join(s.exponents)},
                       {"degrees", join(s.degrees)}},
                      "");
}

std::string render_charpoly(const RunConfig& config, SubsetMask k, const IntPolynomial& chi, std::optional<double> total_ms) {
  switch (config.output) {
    case OutputFormat::Json: {
      Json j = json_header(config, "charpoly");
      j["subset"] = json_subset(k);
      j["chi"] = json_poly(chi);
      j["chi_text"] = poly_text(chi);
      j["timing_ms"] = total_ms ? Json(static_cast<std::int64_t>(*total_ms)) : Json(nullptr);
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_line({"type", "subset", "chi"}) + csv_line({config.type.name(), subset_to_string(k), poly_text(chi)});
    case OutputFormat::Table:
      break;
  }
  return "chi(L^Fix(W_K), t) for " + config.type.name() + ", K = " + subset_to_string(k) + ": " + poly_text(chi) + "\n";
}

std::optional<double> elapsed_ms(bool enabled, std::chrono::steady_clock::time_point start) {
  if (!enabled) return std::nullopt;
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n{}") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CoxeterType parse_type(const std::string& text) {
  const std::string s = lower(text);
  if (s.empty()) throw InvalidType("empty type string");
  static const std::regex factor_re(R"(([abcdefgh])([0-9]+)|i2\(([0-9]+)\))");
  CoxeterType type;
  for (const auto& part : split(s, 'x')) {
    std::smatch m;
    if (!std::regex_match(part, m, factor_re)) throw InvalidType("malformed type factor '" + part + "' in '" + text + "'");
    Factor f;
    if (m[3].matched) {
      if (m[3].length() > 6) throw InvalidType("dihedral order too large in '" + text + "'");
      f.family = Family::I;
      f.rank = 2;
      f.dihedral_m = std::stoi(m[3].str());
    } else {
      if (m[2].length() > 6) throw InvalidType("rank too large in '" + text + "'");
      static const std::string letters = "abcdefgh";
      // C_n is the same group as B_n.
      static const Family families[] = {Family::A, Family::B, Family::B, Family::D,
                                        Family::E, Family::F, Family::G, Family::H};
      f.family = families[letters.find(m[1].str()[0])];
      f.rank = std::stoi(m[2].str());
    }
    validate(f);
    type.factors.push_back(f);
  }
  validate(type);
  return type;
}

std::vector<std::string> parse_identities(const std::string& text) {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (auto part : split(text, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    part = lower(part);
    if (part == "all") {
      for (const auto& n : identity_names()) add(n);
    } else if (std::find(identity_names().begin(), identity_names().end(), part) != identity_names().end()) {
      add(part);
    } else {
      throw std::invalid_argument("unknown identity '" + part + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("no identities requested");
  // Canonical order regardless of how they were listed.
  std::vector<std::string> ordered;
  for (const auto& n : identity_names())
    if (std::find(out.begin(), out.end(), n) != out.end()) ordered.push_back(n);
  return ordered;
}

Command parse_command(const std::string& text) {
  const std::string s = lower(text);
  if (s == "verify") return Command::Verify;
  if (s == "orbits") return Command::Orbits;
  if (s == "charpoly") return Command::Charpoly;
  if (s == "lattice") return Command::Lattice;
  throw std::invalid_argument("unknown command '" + text + "'");
}

OutputFormat parse_output(const std::string& text) {
  const std::string s = lower(text);
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format '" + text + "'");
}

std::string render_verify(const RunConfig& config, const Analysis& a, const std::vector<IdentityReport>& reports,
                          std::optional<double> total_ms) {
  switch (config.output) {
    case OutputFormat::Json: {
      Json j = json_header(config, "verify");
      j["rank"] = a.rank();
      j["group_order"] = a.group().order();
      j["positive_roots"] = a.roots().positive_count;
      j["lattice_nodes"] = a.lattice().size();
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(json_report(r));
      j["identities"] = arr;
      j["holds"] = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds; });
      j["timing_ms"] = total_ms ? Json(static_cast<std::int64_t>(*total_ms)) : Json(nullptr);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) out += "\n";
        out += csv_line({"identity", "type", "holds", "lhs", "rhs", "note"});
        out += csv_line({r.name, config.type.name(), r.holds ? "true" : "false", csv_value(r.lhs), csv_value(r.rhs), r.note});
        if (!r.flags.empty()) {
          out += csv_line({"flag", "value"});
          for (const auto& [name, value] : r.flags) out += csv_line({name, value ? "true" : "false"});
        }
        if (!r.rows.empty()) out += csv_orbit_rows(r.rows);
        if (!r.mismatches.empty()) {
          out += csv_line({"mismatch"});
          for (const auto& m : r.mismatches) out += csv_line({m});
        }
      }
      return out;
    }
    case OutputFormat::Table:
      break;
  }
  std::string out = type_summary(a);
  for (const auto& r : reports) {
    out += "\n" + r.name + ": " + (r.holds ? "holds" : "FAILS");
    if (r.timing_ms) out += "  (" + std::to_string(static_cast<long>(*r.timing_ms)) + " ms)";
    out += "\n";
    if (!r.rows.empty()) {
      out += render_table(orbit_table(r.rows), "  ");
    } else {
      out += render_table({{"lhs", value_text(r.lhs, 16)}, {"rhs", value_text(r.rhs, 16)}}, "  ");
    }
    for (const auto& [name, value] : r.flags) out += "  " + name + ": " + (value ? "yes" : "no") + "\n";
    if (!r.note.empty()) out += "  " + r.note + "\n";
    for (const auto& m : r.mismatches) out += "  mismatch: " + m + "\n";
  }
  if (total_ms) out += "\ntotal " + std::to_string(static_cast<long>(*total_ms)) + " ms\n";
  return out;
}

int exit_code(const std::vector<IdentityReport>& reports) {
  const bool all = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds; });
  return all ? kExitOk : kExitMismatch;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if (contains_factor(config.type, Family::E, 8)) {
      err << "error: E8 exceeds supported scale\n";
      return kExitUsage;
    }
    if (contains_factor(config.type, Family::E, 7) && !config.big) {
      err << "error: E7 requires --big\n";
      return kExitUsage;
    }
    AnalysisOptions options;
    options.threads = std::max(1u, config.threads);
    options.cap = config.cap.value_or(kDefaultEnumerationCap);
    if (config.big) options.cap = std::max(options.cap, kBigCap);

    if (config.command == Command::Lattice || config.command == Command::Charpoly) {
      const RootSystem rs = build_root_system(config.type);
      const BigInt order = rs.type.expected_order();
      if (order > BigInt(static_cast<unsigned long>(options.cap)))
        throw CapExceeded("|W(" + rs.type.name() + ")| = " + order.get_str() + " exceeds the enumeration cap of " +
                          std::to_string(options.cap));
      const auto lat = IntersectionLattice::build(rs);
      if (config.command == Command::Charpoly) {
        const SubsetMask k = parse_subset(config.subset.value_or(""), rs.rank);
        const auto chi = char_poly_upper(lat, fix_node(lat, rs, k));
        out << render_charpoly(config, k, chi, elapsed_ms(config.timing, start));
        return kExitOk;
      }
      LatticeSummary s;
      s.nodes = lat.size();
      s.by_dim = lat.count_by_dim();
      s.chi = char_poly_upper(lat, lat.top());
      s.exponents = exponents(lat);
      s.degrees = degree_data(lat, rs).degrees;
      out << render_lattice(config, s, elapsed_ms(config.timing, start));
      return kExitOk;
    }

    const Analysis a = Analysis::build(config.type, options);
    if (config.command == Command::Orbits) {
      out << render_orbits(config, a, elapsed_ms(config.timing, start));
      return kExitOk;
    }

    std::vector<IdentityReport> reports;
    for (const auto& name : config.identities) {
      const auto t0 = std::chrono::steady_clock::now();
      auto r = verify_identity(a, name);
      r.timing_ms = elapsed_ms(config.timing, t0);
      reports.push_back(std::move(r));
    }
    out << render_verify(config, a, reports, elapsed_ms(config.timing, start));
    return exit_code(reports);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifies orbit-size and alternating-sum identities for finite Coxeter groups", "coxlat"};
  std::string command, type, identities = "all", output = "table", subset;
  std::size_t cap = 0;
  RunConfig config;
  app.add_option("command", command, "verify | orbits | charpoly | lattice")->required();
  app.add_option("--type", type, "Coxeter type, e.g. A3, I2(7), A2xB2")->required();
  app.add_option("--identities", identities,
                 "Comma list of theorem1, theorem2, classical, orbit-sum, lattice-sum, lemma34, degrees, cosets, all");
  app.add_option("--output", output, "table | json | csv");
  app.add_flag("--big", config.big, "Allow E7 and raise the enumeration cap");
  auto* cap_opt = app.add_option("--cap", cap, "Group enumeration cap (default 2000000)");
  auto* subset_opt = app.add_option("--subset", subset, "Subset K as 1-based node numbers, e.g. 1,3");
  app.add_option("--threads", config.threads, "Worker threads (output does not depend on this)");
  app.add_flag("--timing", config.timing, "Include wall-clock timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  try {
    config.command = parse_command(command);
    config.type = parse_type(type);
    config.identities = parse_identities(identities);
    config.output = parse_output(output);
    if (*cap_opt) config.cap = cap;
    if (*subset_opt) config.subset = subset;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace coxlat::cli
