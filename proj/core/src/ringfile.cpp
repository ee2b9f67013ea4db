#include "dsg/ringfile.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "dsg/parse.hpp"

namespace dsg {

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

long parse_positive(const std::string& w, std::size_t line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size() || v <= 0) throw RingFileError(std::string("expected a positive integer ") + what, line);
  return v;
}

}  // namespace

RingFile parse_ring_file(const std::string& text, const GroebnerOptions& opts) {
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::vector<std::int32_t> weights;
  std::vector<std::pair<std::string, std::size_t>> relation_text;
  bool in_relations = false, seen_relations = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto w = words(line);
    if (w.empty()) continue;
    if (in_relations) {
      if (w.size() == 1 && w[0] == "end") {
        in_relations = false;
        continue;
      }
      relation_text.emplace_back(line, lineno);
      continue;
    }
    const auto& key = w[0];
    if (key == "field") {
      if (field) throw RingFileError("duplicate field line", lineno);
      if (w.size() == 2 && w[1] == "QQ") {
        field = Field::rationals();
      } else if (w.size() == 3 && w[1] == "GF") {
        auto p = parse_positive(w[2], lineno, "characteristic");
        try {
          field = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const DomainError& e) {
          throw RingFileError(e.what(), lineno);
        }
      } else {
        throw RingFileError("expected 'field QQ' or 'field GF <prime>'", lineno);
      }
    } else if (key == "vars") {
      if (!vars.empty()) throw RingFileError("duplicate vars line", lineno);
      if (w.size() < 2) throw RingFileError("vars needs at least one variable", lineno);
      std::set<std::string> seen;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!is_identifier(w[i])) throw RingFileError("invalid variable name '" + w[i] + "'", lineno);
        if (!seen.insert(w[i]).second) throw RingFileError("duplicate variable '" + w[i] + "'", lineno);
        vars.push_back(w[i]);
      }
    } else if (key == "weights") {
      if (!weights.empty()) throw RingFileError("duplicate weights line", lineno);
      for (std::size_t i = 1; i < w.size(); ++i)
        weights.push_back(static_cast<std::int32_t>(parse_positive(w[i], lineno, "weight")));
    } else if (key == "relations" && w.size() == 1) {
      if (seen_relations) throw RingFileError("duplicate relations block", lineno);
      if (!field) throw RingFileError("relations before field", lineno);
      if (vars.empty()) throw RingFileError("relations before vars", lineno);
      in_relations = seen_relations = true;
    } else {
      throw RingFileError("unknown directive '" + key + "'", lineno);
    }
  }
  if (in_relations) throw RingFileError("relations block not terminated by 'end'", lineno + 1);
  if (!field) throw RingFileError("missing field line", lineno + 1);
  if (vars.empty()) throw RingFileError("missing vars line", lineno + 1);
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw RingFileError("weights arity differs from vars", lineno + 1);

  PolyRing P(*field, vars, weights);
  RingFile rf;
  rf.source = text;
  std::vector<Polynomial> rels;
  for (const auto& [t, ln] : relation_text) {
    try {
      rels.push_back(parse_polynomial(t, P));
    } catch (const ParseError& e) {
      throw RingFileError(e.what(), ln, e.position() + 1);
    } catch (const DomainError& e) {
      throw RingFileError(e.what(), ln);
    }
    rf.relation_lines.push_back(ln);
  }
  try {
    rf.ring = make_ring(P, std::move(rels), opts);
  } catch (const DomainError& e) {
    throw RingFileError(e.what(), relation_text.empty() ? lineno : relation_text.front().second);
  }
  return rf;
}

RingFile load_ring_file(const std::string& path, const GroebnerOptions& opts) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw RingFileError("cannot open '" + path + "'", 0);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_ring_file(ss.str(), opts);
}

std::string emit_ring_file(const RingPresentation& R) {
  const auto& P = R.ambient();
  std::ostringstream out;
  const auto& F = R.field();
  out << "field " << (F.is_rational() ? std::string("QQ") : "GF " + std::to_string(F.characteristic())) << "\n";
  out << "vars";
  for (const auto& v : P.variables()) out << ' ' << v;
  out << "\nweights";
  for (auto w : P.weights()) out << ' ' << w;
  out << "\nrelations\n";
  for (const auto& f : R.relations()) out << P.format(f) << "\n";
  out << "end\n";
  return out.str();
}

std::string describe_ring(const RingPresentation& R) {
  const auto& P = R.ambient();
  std::string s = R.field().name() + "[";
  for (std::size_t i = 0; i < P.nvars(); ++i) s += (i ? ", " : "") + P.variables()[i];
  s += "]";
  if (!R.relations().empty()) {
    s += "/(";
    for (std::size_t i = 0; i < R.relations().size(); ++i) s += (i ? ", " : "") + P.format(R.relations()[i]);
    s += ")";
  }
  bool weighted = false;
  for (auto w : P.weights()) weighted = weighted || w != 1;
  if (weighted) {
    s += " weights (";
    for (std::size_t i = 0; i < P.nvars(); ++i) s += (i ? ", " : "") + std::to_string(P.weights()[i]);
    s += ")";
  }
  return s;
}

}  // namespace dsg
