#include "dsg/app.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "dsg/errors.hpp"
#include "dsg/parse.hpp"
#include "dsg/pipeline.hpp"
#include "dsg/report.hpp"
#include "dsg/ringfile.hpp"

namespace dsg {

namespace {

struct Args {
  std::string input;
  std::string ideal = "jacobian";
  std::string format = "text";
  std::string radical;
  std::string attest;
  std::string strategy = "auto";
  std::string formula = "auto";
  std::string poly;
  long derived_radius = 0;
  long cap = 0;
};

void add_shared(CLI::App* sub, Args& a) {
  sub->add_option("--input", a.input, "ring file")->required();
  sub->add_option("--ideal", a.ideal, "jacobian, socle, or a comma-separated generator list");
  sub->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--radical", a.radical, "candidate minimal primes, ';'-separated generator lists");
  sub->add_option("--attest", a.attest,
                  "comma list of half-cm-local, equidimensional, prime-candidates, ann, countable-cm-type");
  sub->add_option("--strategy", a.strategy, "auto, artinian, regular, nilpotent-filtration, socle-split")
      ->check(CLI::IsMember({"auto", "artinian", "regular", "nilpotent-filtration", "socle-split"}));
  sub->add_option("--derived-radius", a.derived_radius, "radius of a known ball equal to D^b(R/I)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap", a.cap, "Buchberger step cap")->check(CLI::PositiveNumber);
  sub->add_option("--formula", a.formula, "auto, main, liu, dimsing0, dimsing1, countable-cm, depth-zero")
      ->check(CLI::IsMember({"auto", "main", "liu", "dimsing0", "dimsing1", "countable-cm", "depth-zero"}));
}

PipelineOptions pipeline_options(const Args& a) {
  PipelineOptions o;
  o.ideal = parse_ideal_choice(a.ideal);
  if (!a.radical.empty()) o.radical = a.radical;
  o.attest = parse_attestations(a.attest);
  o.strategy = *parse_strategy(a.strategy);
  if (a.derived_radius > 0) o.derived_radius = a.derived_radius;
  if (a.formula != "auto") o.formula = parse_formula(a.formula);
  return o;
}

bool all_hold(const std::vector<HypothesisStatus>& hs) {
  for (const auto& h : hs)
    if (!holds(h.status)) return false;
  return true;
}

int dispatch(const std::string& cmd, const Args& a, std::ostream& out) {
  GroebnerOptions gopts;
  if (a.cap > 0) gopts.max_steps = static_cast<std::size_t>(a.cap);
  auto rf = load_ring_file(a.input, gopts);
  const auto& R = rf.ring;
  const auto fmt = a.format == "json" ? OutputFormat::Json : OutputFormat::Text;
  const auto ring = describe_ring(*R);
  auto opts = pipeline_options(a);

  if (cmd == "gb" || cmd == "nf") {
    auto I = resolve_ideal(R, opts.ideal);
    if (cmd == "gb") {
      std::vector<std::string> basis;
      for (const auto& g : I.lifted().elements()) basis.push_back(R->format(g));
      out << render_basis(ring, I.format(), basis, fmt);
    } else {
      if (a.poly.empty()) throw ParseError("nf needs --poly", 0);
      auto f = parse_polynomial(a.poly, R->ambient());
      out << render_normal_form(ring, I.format(), R->format(f), R->format(I.lifted().normal_form(f)), fmt);
    }
    return 0;
  }
  if (cmd == "jacobian") {
    out << render_jacobian(ring, jacobian_ideal(R), fmt);
    return 0;
  }
  if (cmd == "invariants") {
    out << render_invariants(analyze(R, opts), fmt);
    return 0;
  }
  if (cmd == "verify") {
    auto an = analyze(R, opts);
    out << render_hypotheses(an, fmt);
    return all_hold(an.hypotheses) ? 0 : 1;
  }
  auto report = compute_bound(R, opts);
  out << render_bound(report, fmt);
  return report.dim_bound ? 0 : 1;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds for the dimension of singularity categories of quotient rings", "dsgbound"};
  app.require_subcommand(1);
  Args args;
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"gb", "reduced Groebner basis of I + J"},
      {"nf", "normal form of --poly modulo I + J"},
      {"invariants", "mu, grade, depth, dim, Loewy length, nilpotency index, type"},
      {"jacobian", "the Jacobian ideal of R"},
      {"bound", "upper bound for dim D_sg(R)"},
      {"verify", "hypothesis statuses"},
  };
  for (const auto& [name, help] : cmds) {
    auto* sub = app.add_subcommand(name, help);
    add_shared(sub, args);
    if (name == "nf") sub->add_option("--poly", args.poly, "polynomial to reduce")->required();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string cmd;
  for (auto* sub : app.get_subcommands()) cmd = sub->get_name();
  try {
    return dispatch(cmd, args, out);
  } catch (const RingFileError& e) {
    err << "error: " << args.input << ":" << e.line();
    if (e.column()) err << ":" << e.column();
    err << ": " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: at offset " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace dsg
