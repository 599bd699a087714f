#pragma once

// Line-oriented text format for arrangements.
//
//   # comment
//   arrangement A(7,1)
//   field Q                      (or: field Qsqrt 3; default Q)
//   lines 7
//   tvector 3 6                  (t2 t3 ...; may be omitted when lines are given)
//   expected mu 27               (optional, verbatim from a table)
//   expected disc pos            (pos | neg | zero)
//   expected roots 0 2           (one or two integers, or real | complex)
//   line 1 0 0                   (d times; "p/q" or "a+b*sqrt(n)" literals)
//   end

#include <charconv>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linefree/catalogue/entry.hpp"
#include "linefree/error.hpp"

namespace linefree {

namespace detail {

inline std::optional<mpq_class> parse_rational(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace detail

/// Reads "p", "p/q", "b*sqrt(n)", "sqrt(n)", "a+b*sqrt(n)", "a-sqrt(n)" and
/// the like. No spaces inside a literal.
inline std::optional<Number> parse_number(std::string_view text) {
  static const std::regex re(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\))?$)");
  std::match_results<std::string_view::const_iterator> m;
  if (text.empty() || !std::regex_match(text.begin(), text.end(), m, re)) return std::nullopt;
  const bool has_a = m[1].matched, has_root = m[4].matched;
  if (!has_a && !has_root) return std::nullopt;
  if (has_a && has_root && m[2].length() == 0) return std::nullopt;  // "3sqrt(2)"
  mpq_class a = 0, b = 0;
  if (has_a) {
    auto q = detail::parse_rational(m[1].str());
    if (!q) return std::nullopt;
    a = *q;
  }
  if (!has_root) return Number(a);
  b = 1;
  if (m[3].matched) {
    auto q = detail::parse_rational(m[3].str());
    if (!q) return std::nullopt;
    b = *q;
  }
  if (m[2].str() == "-") b = -b;
  std::int64_t n = 0;
  const std::string ns = m[4].str();
  auto [ptr, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  if (ec != std::errc{} || ptr != ns.data() + ns.size() || n < 1) return std::nullopt;
  return Number(a, b, n);
}

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline long parse_integer(const std::string& tok, std::size_t line, const char* what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw SyntaxError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
  }
  return v;
}

/// Table names must be "A(n,k)"; anything else starting with "A(" is rejected
/// so that typos such as "A(19.5)" do not pass silently.
inline bool valid_name(const std::string& name) {
  static const std::regex table_name(R"(^A\((\d+),(\d+)\)$)");
  static const std::regex plain(R"(^[A-Za-z0-9_+.,()/-]+$)");
  if (name.rfind("A(", 0) == 0) return std::regex_match(name, table_name);
  return std::regex_match(name, plain);
}

inline std::optional<long> table_line_count(const std::string& name) {
  static const std::regex table_name(R"(^A\((\d+),(\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(name, m, table_name)) return std::nullopt;
  return std::stol(m[1].str());
}

struct PendingEntry {
  std::string name;
  std::size_t start = 0;
  std::optional<FieldSpec> field;
  std::optional<long> d;
  std::optional<TVector> t;
  Expected expected;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
};

inline CatalogueEntry finish_entry(PendingEntry p) {
  if (!p.d) throw SyntaxError(p.start, "entry '" + p.name + "' has no 'lines' declaration");
  if (!p.t && p.lines.empty()) throw SyntaxError(p.start, "entry '" + p.name + "' has neither tvector nor coordinates");
  CatalogueEntry e;
  e.name = p.name;
  e.d = *p.d;
  e.field = p.field.value_or(FieldSpec::rationals());
  e.expected = p.expected;
  if (auto n = table_line_count(e.name); n && *n != e.d) {
    throw ConsistencyError(e.name, "name says " + std::to_string(*n) + " lines but 'lines' is " + std::to_string(e.d));
  }
  if (!p.lines.empty()) {
    if (static_cast<long>(p.lines.size()) != e.d) {
      throw ConsistencyError(e.name, "declares " + std::to_string(e.d) + " lines but lists " +
                                         std::to_string(p.lines.size()));
    }
    std::vector<ProjectiveLine> lines;
    for (const auto& [no, toks] : p.lines) {
      std::array<Number, 3> c;
      for (std::size_t i = 0; i < 3; ++i) {
        auto x = parse_number(toks[i]);
        if (!x) throw SyntaxError(no, "malformed coefficient '" + toks[i] + "'");
        if (!x->is_rational() && (e.field.is_rational() || x->radicand() != e.field.radicand())) {
          throw ConsistencyError(e.name, "coefficient " + toks[i] + " is not in " + e.field.to_string());
        }
        c[i] = std::move(*x);
      }
      try {
        lines.emplace_back(c);
      } catch (const InvalidLine& err) {
        throw ConsistencyError(e.name, "line " + std::to_string(no) + ": " + err.what());
      }
    }
    try {
      e.realization.emplace(e.field, std::move(lines), e.name);
    } catch (const Error& err) {
      throw ConsistencyError(e.name, err.what());
    }
    TVector computed = t_vector(*e.realization);
    if (p.t && !(*p.t == computed)) {
      throw ConsistencyError(e.name, "declared t-vector " + p.t->to_string() + " but the lines give " +
                                         computed.to_string());
    }
    e.t = computed;
  } else {
    e.t = *p.t;
  }
  if (e.t.max_multiplicity() > e.d) throw ConsistencyError(e.name, "a point lies on more lines than exist");
  if (e.t.pair_count() != e.d * (e.d - 1) / 2) {
    throw ConsistencyError(e.name, "t-vector accounts for " + std::to_string(e.t.pair_count()) +
                                       " line pairs, expected " + std::to_string(e.d * (e.d - 1) / 2));
  }
  return e;
}

}  // namespace detail

inline CatalogueFile parse_catalogue(std::string_view text) {
  CatalogueFile file;
  std::optional<detail::PendingEntry> cur;
  std::size_t no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tok = detail::split_tokens(raw);
    if (tok.empty()) continue;
    const std::string& key = tok[0];

    if (!cur) {
      if (key != "arrangement") throw SyntaxError(no, "expected 'arrangement', got '" + key + "'");
      if (tok.size() != 2) throw SyntaxError(no, "'arrangement' takes exactly one name");
      if (!detail::valid_name(tok[1])) throw SyntaxError(no, "invalid entry name '" + tok[1] + "'");
      cur.emplace();
      cur->name = tok[1];
      cur->start = no;
      continue;
    }
    if (key == "end") {
      if (tok.size() != 1) throw SyntaxError(no, "'end' takes no arguments");
      CatalogueEntry e = detail::finish_entry(std::move(*cur));
      cur.reset();
      if (file.find(e.name)) throw ConsistencyError(e.name, "duplicate entry name");
      file.entries.push_back(std::move(e));
    } else if (key == "field") {
      if (cur->field) throw SyntaxError(no, "repeated 'field'");
      if (tok.size() == 2 && tok[1] == "Q") {
        cur->field = FieldSpec::rationals();
      } else if (tok.size() == 3 && tok[1] == "Qsqrt") {
        try {
          cur->field = FieldSpec::quadratic(detail::parse_integer(tok[2], no, "the radicand"));
        } catch (const UnsupportedField& err) {
          throw SyntaxError(no, err.what());
        }
      } else {
        throw SyntaxError(no, "expected 'field Q' or 'field Qsqrt <n>'");
      }
    } else if (key == "lines") {
      if (cur->d) throw SyntaxError(no, "repeated 'lines'");
      if (tok.size() != 2) throw SyntaxError(no, "'lines' takes one integer");
      long d = detail::parse_integer(tok[1], no, "the line count");
      if (d < 1) throw SyntaxError(no, "line count must be positive");
      cur->d = d;
    } else if (key == "tvector") {
      if (cur->t) throw SyntaxError(no, "repeated 'tvector'");
      std::vector<long> counts;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        long v = detail::parse_integer(tok[i], no, "a t-vector entry");
        if (v < 0) throw SyntaxError(no, "negative t-vector entry");
        counts.push_back(v);
      }
      cur->t = TVector::from_positional(counts);
    } else if (key == "expected") {
      if (tok.size() < 3) throw SyntaxError(no, "'expected' needs a field and a value");
      Expected& ex = cur->expected;
      if (tok[1] == "mu") {
        if (ex.mu || tok.size() != 3) throw SyntaxError(no, "bad or repeated 'expected mu'");
        ex.mu = detail::parse_integer(tok[2], no, "mu");
      } else if (tok[1] == "disc") {
        if (ex.disc || tok.size() != 3) throw SyntaxError(no, "bad or repeated 'expected disc'");
        if (tok[2] == "pos") ex.disc = Sign::Positive;
        else if (tok[2] == "neg") ex.disc = Sign::Negative;
        else if (tok[2] == "zero") ex.disc = Sign::Zero;
        else throw SyntaxError(no, "discriminant sign must be pos, neg or zero");
      } else if (tok[1] == "roots") {
        if (ex.roots) throw SyntaxError(no, "repeated 'expected roots'");
        PrintedRoots r;
        if (tok.size() == 3 && tok[2] == "real") {
          r.kind = PrintedRoots::Kind::Real;
        } else if (tok.size() == 3 && tok[2] == "complex") {
          r.kind = PrintedRoots::Kind::Complex;
        } else if (tok.size() <= 4) {
          for (std::size_t i = 2; i < tok.size(); ++i) r.values.push_back(detail::parse_integer(tok[i], no, "a root"));
        } else {
          throw SyntaxError(no, "at most two roots");
        }
        ex.roots = r;
      } else {
        throw SyntaxError(no, "unknown expectation '" + tok[1] + "'");
      }
    } else if (key == "line") {
      if (tok.size() != 4) throw SyntaxError(no, "'line' takes three coefficients");
      cur->lines.emplace_back(no, std::vector<std::string>(tok.begin() + 1, tok.end()));
    } else if (key == "arrangement") {
      throw SyntaxError(no, "entry '" + cur->name + "' is not closed by 'end'");
    } else {
      throw SyntaxError(no, "unknown keyword '" + key + "'");
    }
  }
  if (cur) throw SyntaxError(no, "entry '" + cur->name + "' is not closed by 'end'");
  return file;
}

inline std::string serialize_catalogue(const CatalogueFile& file) {
  std::string out;
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    const CatalogueEntry& e = file.entries[i];
    if (i) out += "\n";
    out += "arrangement " + e.name + "\n";
    out += e.field.is_rational() ? "field Q\n" : "field Qsqrt " + std::to_string(e.field.radicand()) + "\n";
    out += "lines " + std::to_string(e.d) + "\n";
    out += "tvector";
    for (long c : e.t.positional()) out += " " + std::to_string(c);
    out += "\n";
    if (e.expected.mu) out += "expected mu " + std::to_string(*e.expected.mu) + "\n";
    if (e.expected.disc) out += "expected disc " + to_string(*e.expected.disc) + "\n";
    if (e.expected.roots) out += "expected roots " + e.expected.roots->to_string() + "\n";
    if (e.realization) {
      for (const auto& l : e.realization->lines()) {
        out += "line " + l[0].to_string() + " " + l[1].to_string() + " " + l[2].to_string() + "\n";
      }
    }
    out += "end\n";
  }
  return out;
}

inline CatalogueFile load_catalogue(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalogue(buf.str());
}

}  // namespace linefree
