#include "dsg/report.hpp"

#include <sstream>

#include <json.hpp>

#include "dsg/ringfile.hpp"

namespace dsg {

namespace {

using nlohmann::json;

json opt(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

json invariants_json(const InvariantValues& v) {
  return json{{"mu", opt(v.mu)},     {"grade", opt(v.grade)},           {"depth", opt(v.depth)},
              {"dim", opt(v.dim)},   {"loewy", opt(v.loewy)},           {"nilpotency", opt(v.nilpotency)},
              {"type", opt(v.type)}};
}

json hypotheses_json(const std::vector<HypothesisStatus>& hs) {
  json arr = json::array();
  for (const auto& h : hs) arr.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"evidence", h.evidence}});
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string text_opt(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

void text_invariants(std::ostream& out, const InvariantValues& v) {
  out << "invariants: mu=" << text_opt(v.mu) << " grade=" << text_opt(v.grade) << " depth=" << text_opt(v.depth)
      << " dim=" << text_opt(v.dim) << " loewy=" << text_opt(v.loewy) << " nilpotency=" << text_opt(v.nilpotency)
      << " type=" << text_opt(v.type) << "\n";
}

void text_hypotheses(std::ostream& out, const std::vector<HypothesisStatus>& hs) {
  for (const auto& h : hs) out << "hypothesis " << h.name << ": " << to_string(h.status) << " (" << h.evidence << ")\n";
}

void text_lines(std::ostream& out, const char* key, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << key << ": " << l << "\n";
}

}  // namespace

std::string render_bound(const BoundReport& r, OutputFormat f) {
  if (f == OutputFormat::Json) {
    json j;
    j["ring"] = r.ring;
    j["ideal"] = r.ideal;
    j["invariants"] = invariants_json(r.invariants);
    j["hypotheses"] = hypotheses_json(r.hypotheses);
    if (r.ball) {
      j["ball"] = {{"category", to_string(r.ball->category)},
                   {"generator", r.ball->generator},
                   {"class_generator", r.ball->class_generator},
                   {"radius", r.ball->radius},
                   {"provenance", r.ball->provenance}};
    } else {
      j["ball"] = nullptr;
    }
    j["dim_bound"] = opt(r.dim_bound);
    j["formula"] = r.formula;
    j["formula_text"] = r.formula_text;
    j["trace"] = r.trace;
    j["warnings"] = r.warnings;
    return dump(j);
  }
  std::ostringstream out;
  out << "ring: " << r.ring << "\n";
  out << "ideal: " << r.ideal << "\n";
  text_invariants(out, r.invariants);
  text_hypotheses(out, r.hypotheses);
  if (r.ball) {
    out << "ball: " << to_string(r.ball->category) << " = " << r.ball->format() << "\n";
    for (const auto& p : r.ball->provenance) out << "  by " << p << "\n";
  } else {
    out << "ball: -\n";
  }
  out << "formula: " << r.formula << ": " << r.formula_text << "\n";
  out << "dim_bound: " << text_opt(r.dim_bound) << "\n";
  text_lines(out, "trace", r.trace);
  text_lines(out, "warning", r.warnings);
  return out.str();
}

std::string render_invariants(const Analysis& a, OutputFormat f) {
  const auto ring = describe_ring(*a.ring);
  if (f == OutputFormat::Json) {
    json j{{"ring", ring},
           {"ideal", a.ideal.format()},
           {"invariants", invariants_json(a.invariants)},
           {"hypotheses", hypotheses_json(a.hypotheses)},
           {"trace", a.trace},
           {"warnings", a.warnings}};
    return dump(j);
  }
  std::ostringstream out;
  out << "ring: " << ring << "\n";
  out << "ideal: " << a.ideal.format() << "\n";
  text_invariants(out, a.invariants);
  text_hypotheses(out, a.hypotheses);
  text_lines(out, "trace", a.trace);
  text_lines(out, "warning", a.warnings);
  return out.str();
}

std::string render_hypotheses(const Analysis& a, OutputFormat f) {
  const auto ring = describe_ring(*a.ring);
  if (f == OutputFormat::Json) {
    json j{{"ring", ring}, {"ideal", a.ideal.format()}, {"hypotheses", hypotheses_json(a.hypotheses)},
           {"warnings", a.warnings}};
    return dump(j);
  }
  std::ostringstream out;
  out << "ring: " << ring << "\n";
  out << "ideal: " << a.ideal.format() << "\n";
  text_hypotheses(out, a.hypotheses);
  text_lines(out, "warning", a.warnings);
  return out.str();
}

std::string render_basis(const std::string& ring, const std::string& ideal, const std::vector<std::string>& basis,
                         OutputFormat f) {
  if (f == OutputFormat::Json) return dump(json{{"ring", ring}, {"ideal", ideal}, {"basis", basis}});
  std::ostringstream out;
  out << "ring: " << ring << "\nideal: " << ideal << "\nbasis:\n";
  for (const auto& b : basis) out << "  " << b << "\n";
  return out.str();
}

std::string render_normal_form(const std::string& ring, const std::string& ideal, const std::string& poly,
                               const std::string& nf, OutputFormat f) {
  if (f == OutputFormat::Json)
    return dump(json{{"ring", ring}, {"ideal", ideal}, {"polynomial", poly}, {"normal_form", nf}});
  return "ring: " + ring + "\nideal: " + ideal + "\npolynomial: " + poly + "\nnormal_form: " + nf + "\n";
}

std::string render_jacobian(const std::string& ring, const JacobianIdeal& jac, OutputFormat f) {
  std::vector<std::string> gens;
  for (const auto& g : jac.ideal.generators()) gens.push_back(jac.ideal.ring().format(g));
  std::vector<std::string> warnings;
  if (jac.note) warnings.push_back(*jac.note);
  if (f == OutputFormat::Json)
    return dump(json{{"ring", ring},
                     {"height", jac.height},
                     {"jacobian", jac.ideal.format()},
                     {"generators", gens},
                     {"warnings", warnings}});
  std::ostringstream out;
  out << "ring: " << ring << "\nheight: " << jac.height << "\njacobian: " << jac.ideal.format() << "\n";
  text_lines(out, "warning", warnings);
  return out.str();
}

}  // namespace dsg
