#pragma once

// The analyze / screen / classify / table commands, separated from argument
// parsing so that tests can run them against string streams.
//
// Exit codes: 0 success, 1 parse / consistency / usage error, 2 entry has no
// coordinates, 3 internal inconsistency, 4 unexpected table mismatch.

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "linefree/linefree.hpp"

namespace linefree::cli {

enum class OutputFormat { Human, Json, Csv, Markdown };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 1;
inline constexpr int no_coordinates = 2;
inline constexpr int inconsistency = 3;
inline constexpr int table_mismatch = 4;
}  // namespace exit_code

struct CommandOptions {
  OutputFormat format = OutputFormat::Human;
  std::optional<std::uint64_t> modulus;
  std::optional<int> max_degree;
  unsigned threads = 0;
};

/// "builtin:table1" and "builtin:fixtures" name the embedded catalogues.
inline CatalogueFile load_source(const std::string& path) {
  if (path == "builtin:table1") return embedded_table();
  if (path == "builtin:fixtures") return embedded_realizations();
  return load_catalogue(path);
}

namespace detail {

using nlohmann::ordered_json;

inline ordered_json roots_json(const QuadraticRoots& r) {
  auto p = PrintedRoots::of(r);
  if (p.kind == PrintedRoots::Kind::Integers) return p.values;
  return p.to_string();
}

inline std::string verdict_key(Verdict v) {
  switch (v) {
    case Verdict::Free: return "free";
    case Verdict::NearlyFree: return "nearly free";
    case Verdict::Neither: return "neither";
    case Verdict::ScreenOnly: return "screen only";
  }
  return "?";
}

/// One record with every documented key; keys that a command does not
/// compute are null.
inline ordered_json record(const CatalogueEntry& e) {
  CombinatorialProfile p = e.profile();
  DimcaQuadratic q = quadratic(p);
  ordered_json j;
  j["name"] = e.name;
  j["d"] = e.d;
  j["tvector"] = e.t.positional();
  j["mu"] = p.mu;
  j["simplicial"] = p.simplicial;
  j["disc"] = q.discriminant;
  j["disc_sign"] = to_string(q.discriminant_sign());
  j["roots"] = roots_json(q.roots);
  j["screen"] = screen(p);
  j["mdr"] = nullptr;
  j["verdict"] = nullptr;
  j["exponents"] = nullptr;
  return j;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? sep : "") + cells[i];
  return out;
}

/// Renders rows in csv, markdown or aligned plain text.
inline void emit_table(std::ostream& out, OutputFormat fmt, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  if (fmt == OutputFormat::Csv) {
    std::vector<std::string> h;
    for (const auto& c : header) h.push_back(csv_quote(c));
    out << join(h, ",") << "\n";
    for (const auto& r : rows) {
      std::vector<std::string> q;
      for (const auto& c : r) q.push_back(csv_quote(c));
      out << join(q, ",") << "\n";
    }
    return;
  }
  if (fmt == OutputFormat::Markdown) {
    out << "| " << join(header, " | ") << " |\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& r : rows) out << "| " << join(r, " | ") << " |\n";
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

inline const CatalogueEntry* select(const CatalogueFile& file, const std::string& name, std::ostream& err) {
  const CatalogueEntry* e = file.find(name);
  if (!e) err << "error: no entry named '" << name << "'\n";
  return e;
}

/// Runs `body`, mapping library errors to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_code::inconsistency;
  } catch (const NotStabilized& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_code::inconsistency;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }
}

}  // namespace detail

inline int cmd_analyze(const std::string& path, const std::optional<std::string>& entry, const CommandOptions& opt,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    CatalogueFile file = load_source(path);
    std::vector<const CatalogueEntry*> chosen;
    if (entry) {
      const CatalogueEntry* e = detail::select(file, *entry, err);
      if (!e) return exit_code::parse_error;
      chosen.push_back(e);
    } else {
      for (const auto& e : file.entries) chosen.push_back(&e);
    }
    if (opt.format == OutputFormat::Json) {
      auto arr = detail::ordered_json::array();
      for (const auto* e : chosen) arr.push_back(detail::record(*e));
      out << arr.dump(2) << "\n";
      return exit_code::ok;
    }
    if (opt.format == OutputFormat::Human) {
      for (const auto* e : chosen) {
        auto p = e->profile();
        out << e->name << ": d=" << p.d << " t=" << p.t.to_string() << " mu=" << p.mu
            << " simplicial=" << (p.simplicial ? "yes" : "no") << "\n";
      }
      return exit_code::ok;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto* e : chosen) {
      auto p = e->profile();
      rows.push_back({e->name, std::to_string(p.d), p.t.to_string(), std::to_string(p.mu),
                      p.simplicial ? "yes" : "no"});
    }
    detail::emit_table(out, opt.format, {"name", "d", "tvector", "mu", "simplicial"}, rows);
    return exit_code::ok;
  });
}

inline int cmd_screen(const std::string& path, const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    CatalogueFile file = load_source(path);
    if (opt.format == OutputFormat::Json) {
      auto arr = detail::ordered_json::array();
      for (const auto& e : file.entries) arr.push_back(detail::record(e));
      out << arr.dump(2) << "\n";
      return exit_code::ok;
    }
    std::vector<std::vector<std::string>> rows;
    std::size_t passing = 0;
    for (const auto& e : file.entries) {
      auto q = quadratic(e.profile());
      bool pass = screen(e.profile());
      passing += pass;
      rows.push_back({e.name, std::to_string(e.d), std::to_string(milnor_number(e.t)),
                      std::to_string(q.discriminant), roots_string(q.roots), pass ? "pass" : "fail"});
    }
    detail::emit_table(out, opt.format, {"name", "d", "mu", "disc", "roots", "screen"}, rows);
    if (opt.format == OutputFormat::Human) {
      out << passing << " of " << file.size() << " entries pass the screen\n";
    }
    return exit_code::ok;
  });
}

inline int cmd_classify(const std::string& path, const std::optional<std::string>& entry,
                        const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    CatalogueFile file = load_source(path);
    std::vector<const CatalogueEntry*> chosen;
    if (entry) {
      const CatalogueEntry* e = detail::select(file, *entry, err);
      if (!e) return exit_code::parse_error;
      if (!e->realization) {
        err << "error: entry '" << e->name << "' has no coordinates; only the screen applies\n";
        return exit_code::no_coordinates;
      }
      chosen.push_back(e);
    } else {
      for (const auto& e : file.entries) chosen.push_back(&e);
      bool any = false;
      for (const auto* e : chosen) any = any || e->realization.has_value();
      if (!any) {
        err << "error: no entry in '" << path << "' has coordinates\n";
        return exit_code::no_coordinates;
      }
    }

    ClassifyOptions copt;
    copt.compute.modulus = opt.modulus;
    copt.max_degree = opt.max_degree;
    // Parallelism across entries when there are several, inside otherwise.
    copt.compute.threads = chosen.size() > 1 ? 1 : opt.threads;
    std::vector<Classification> results(chosen.size());
    linefree::detail::parallel_for(chosen.size(), chosen.size() > 1 ? opt.threads : 1, [&](std::size_t i) {
      const auto* e = chosen[i];
      results[i] = e->realization ? classify(*e->realization, copt) : classify(e->profile());
    });

    if (opt.format == OutputFormat::Json) {
      auto arr = detail::ordered_json::array();
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        const auto& c = results[i];
        auto j = detail::record(*chosen[i]);
        j["mdr"] = c.mdr ? detail::ordered_json(*c.mdr) : detail::ordered_json(nullptr);
        j["verdict"] = detail::verdict_key(c.verdict);
        if (c.exponents) j["exponents"] = {c.exponents->first, c.exponents->second};
        j["tau"] = c.tau ? detail::ordered_json(*c.tau) : detail::ordered_json(nullptr);
        j["generator_degrees"] = c.generator_degrees;
        j["dimca_criterion"] = to_string(c.dimca_criterion);
        j["free_identity"] = to_string(c.free_identity);
        arr.push_back(j);
      }
      out << arr.dump(2) << "\n";
      return exit_code::ok;
    }
    if (opt.format == OutputFormat::Human) {
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        const auto& c = results[i];
        out << chosen[i]->name << ": " << c.verdict_string() << "\n";
        out << "  d=" << c.d << " mu=" << c.mu;
        if (c.tau) out << " tau=" << *c.tau;
        if (c.mdr) out << " mdr=" << *c.mdr;
        out << " disc=" << c.quadratic.discriminant << " roots " << roots_string(c.quadratic.roots) << "\n";
        if (c.shape) {
          out << "  generators in degrees {";
          for (std::size_t g = 0; g < c.generator_degrees.size(); ++g) out << (g ? "," : "") << c.generator_degrees[g];
          out << "}: " << to_string(*c.shape) << "\n";
          out << "  mdr root of quadratic: " << to_string(c.dimca_criterion)
              << "; free identity: " << to_string(c.free_identity) << "\n";
        }
      }
      return exit_code::ok;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const auto& c = results[i];
      std::string ex = c.exponents ? "(" + std::to_string(c.exponents->first) + "," +
                                         std::to_string(c.exponents->second) + ")"
                                   : "";
      rows.push_back({chosen[i]->name, std::to_string(c.d), std::to_string(c.mu), c.mdr ? std::to_string(*c.mdr) : "",
                      c.tau ? std::to_string(*c.tau) : "", detail::verdict_key(c.verdict), ex});
    }
    detail::emit_table(out, opt.format, {"name", "d", "mu", "mdr", "tau", "verdict", "exponents"}, rows);
    return exit_code::ok;
  });
}

inline int cmd_table(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto rows = reproduce_table(embedded_table().entries);
    std::size_t known = 0, mismatches = 0;
    for (const auto& r : rows) {
      known += r.status == RowStatus::KnownDiscrepancy;
      mismatches += r.status == RowStatus::Mismatch;
    }
    if (opt.format == OutputFormat::Json) {
      auto arr = detail::ordered_json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        auto j = detail::record(embedded_table().entries[i]);
        j["status"] = to_string(r.status);
        j["note"] = r.note;
        arr.push_back(j);
      }
      out << arr.dump(2) << "\n";
    } else {
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : rows) {
        std::string disc = r.quadratic.discriminant < 0 ? "<0" : (r.quadratic.discriminant == 0 ? "0" : ">0");
        cells.push_back({r.name, r.t.to_string(), std::to_string(r.mu), disc, roots_string(r.quadratic.roots),
                         to_string(r.status) + (r.note.empty() ? "" : ": " + r.note)});
      }
      detail::emit_table(out, opt.format, {"A(n,k)", "(t2,t3,...)", "mu", "disc", "roots", "check"}, cells);
      if (opt.format == OutputFormat::Human) {
        out << rows.size() << " rows, " << known << " known discrepancy, " << mismatches << " mismatches\n";
      }
    }
    for (const auto& r : rows) {
      if (r.status == RowStatus::KnownDiscrepancy) err << "warning: " << r.name << ": " << r.note << "\n";
      if (r.status == RowStatus::Mismatch) err << "mismatch: " << r.name << ": " << r.note << "\n";
    }
    return mismatches ? exit_code::table_mismatch : exit_code::ok;
  });
}

}  // namespace linefree::cli
