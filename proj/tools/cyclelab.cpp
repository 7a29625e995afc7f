// cyclelab: generate, search, colour and extract oriented cycles in digraphs.
//
// Exit codes: 0 verdict reached, 1 suite failure or invalid certificate,
// 2 inconclusive (budget spent), 3 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclelab/certificate.hpp"
#include "cyclelab/chromatic.hpp"
#include "cyclelab/construct.hpp"
#include "cyclelab/digraph_io.hpp"
#include "cyclelab/errors.hpp"
#include "cyclelab/extract.hpp"
#include "cyclelab/random_digraph.hpp"
#include "cyclelab/search.hpp"
#include "cyclelab/suites.hpp"

using namespace cyclelab;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

std::string join(const std::vector<std::size_t>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

struct GenArgs {
  std::string construction;
  std::size_t k = 3;
  std::size_t blob = 2;
  std::size_t m = 3;
  std::size_t r = 2;
  std::size_t n = 10;
  double p = 0.5;
  double min_out = 0.0;
  std::uint64_t seed = 1;
  bool balance = false;
  std::size_t cap = kDefaultVertexCap;
  std::string out;
  std::string dot;
};

int cmd_gen(const GenArgs& a) {
  Digraph d;
  std::optional<Construction> layout;
  const std::string& c = a.construction;
  if (c == "blowup") {
    d = blowup_cycle(a.k, a.blob);
  } else if (c == "shift") {
    d = shift_digraph(a.m, a.r, a.cap);
  } else if (c == "gshift") {
    d = general_shift_digraph(a.m, a.k, a.cap);
  } else if (c == "augmented" || c == "balanced") {
    Construction base = augmented_flip_free(a.m, a.k, a.cap);
    layout = (c == "balanced" || a.balance) ? balance_by_cloning(base, a.cap) : std::move(base);
    d = layout->graph;
  } else if (c == "random") {
    d = random_digraph_min_out(a.n, a.p, a.min_out, a.seed).graph;
  } else if (c == "complete") {
    d = complete_digraph(a.n);
  } else if (c == "cycle") {
    d = directed_cycle(a.n);
  } else if (c == "tournament") {
    d = transitive_tournament(a.n);
  } else {
    throw ParameterRejected("unknown construction '" + c + "'");
  }

  save_digraph(a.out, d);
  write_json(a.out + ".audit.json", degree_audit_certificate(d));
  std::cout << "wrote " << a.out << ": " << d.vertex_count() << " vertices, " << d.arc_count() << " arcs\n";
  if (!d.empty()) std::cout << "min out-degree " << min_out_degree(d) << '\n';
  if (layout) {
    Json side = to_json(layout->layout);
    if (layout->layout.rounds != std::array<std::size_t, 4>{}) side["audit"] = to_json(audit_balanced(*layout));
    write_json(a.out + ".layout.json", side);
    std::cout << "groups";
    for (auto g : kGroups) std::cout << ' ' << to_string(g) << '=' << layout->layout.group_size(g);
    std::cout << ", q=" << layout->layout.q << '\n';
  }
  if (!a.dot.empty()) {
    std::ofstream dot(a.dot);
    write_dot(dot, d);
  }
  return kOk;
}

struct CheckArgs {
  std::string file;
  std::string pattern;
  std::size_t family = 0;
  std::uint64_t budget = 0;
  std::string out;
};

int cmd_check(const CheckArgs& a) {
  const Digraph d = load_digraph(a.file);
  std::vector<std::pair<CyclePattern, SearchOutcome>> results;
  const SearchBudget budget{a.budget};
  if (a.family != 0) {
    for (auto& e : forbidden_family_check(d, a.family, budget).entries) results.emplace_back(e.pattern, e.outcome);
  } else {
    const CyclePattern p = CyclePattern::parse(a.pattern);
    results.emplace_back(p, contains_pattern(d, p, budget));
  }

  Json certs = Json::array();
  bool inconclusive = false;
  std::size_t clear = 0;
  for (const auto& [p, o] : results) {
    std::cout << p.word() << ": " << to_string(o.status);
    if (o.status == SearchStatus::NotFound) std::cout << (o.exhaustive ? " (exhaustive)" : "");
    std::cout << ", " << o.steps << " steps";
    if (o.found()) {
      std::cout << ", map " << join(o.embedding->map);
      certs.push_back(embedding_certificate(d, *o.embedding));
    } else if (o.status == SearchStatus::NotFound && o.exhaustive) {
      certs.push_back(non_containment_certificate(d, p, o, budget));
      ++clear;
    } else {
      inconclusive = true;
    }
    std::cout << '\n';
  }
  if (a.family != 0) std::cout << clear << "/" << results.size() << " NotFound (exhaustive)\n";
  if (!a.out.empty()) write_json(a.out, certs.size() == 1 ? certs[0] : certs);
  return inconclusive ? kInconclusive : kOk;
}

struct ChiArgs {
  std::string file;
  bool bounds = false;
  std::uint64_t budget = 0;
  std::string out;
};

int cmd_chi(const ChiArgs& a) {
  const Digraph d = load_digraph(a.file);
  const ChromaticBudget budget{a.budget};
  const ChromaticResult r = a.bounds ? chromatic_bounds(d) : chromatic_exact(d, budget);
  if (r.exact) {
    std::cout << "chi = " << r.upper << '\n';
  } else {
    std::cout << r.lower << " <= chi <= " << r.upper << '\n';
  }
  std::cout << "clique witness: " << join(r.witness_clique) << '\n';
  if (!a.bounds) std::cout << "search nodes: " << r.nodes << (r.budget_exhausted ? " (budget exhausted)" : "") << '\n';
  if (!a.out.empty()) write_json(a.out, coloring_certificate(d, r, budget));
  return !a.bounds && !r.exact ? kInconclusive : kOk;
}

struct ExtractArgs {
  std::string file;
  std::string pattern;
  std::string epsilon = "0.3";
  std::uint64_t budget = 2'000'000;
  std::uint64_t chi_budget = 200'000;
  std::string out;
  std::string trace;
};

int cmd_extract(const ExtractArgs& a) {
  const CyclePattern p = CyclePattern::parse(a.pattern);
  const Digraph d = load_digraph(a.file);
  ExtractionParams params;
  params.epsilon = parse_rational(a.epsilon);
  params.search.steps = a.budget;
  params.chromatic.nodes = a.chi_budget;
  const ExtractionResult r = extract_any(d, p, params);
  const ExtractionTrace& t = r.trace;

  std::cout << "route: " << to_string(t.route) << " (working word " << t.working_word << ")\n";
  std::cout << "sequence: " << join(t.sequence) << '\n';
  std::vector<std::size_t> sizes;
  for (const auto& s : t.families) sizes.push_back(s.size());
  std::cout << "family sizes: " << join(sizes) << '\n';
  for (const auto& e : t.events) std::cout << "  " << e << '\n';
  if (r.found()) {
    std::cout << "Found: " << p.word() << " -> " << join(r.embedding->map) << '\n';
  } else {
    std::cout << "Failed\n";
  }
  const Json cert = extraction_certificate(d, p, r, params);
  if (!a.trace.empty()) write_json(a.trace, cert.at("trace"));
  if (!a.out.empty()) write_json(a.out, r.found() ? embedding_certificate(d, *r.embedding) : cert);
  return r.found() ? kOk : kInconclusive;
}

int cmd_classify(const std::string& word) {
  const CyclePattern p = CyclePattern::parse(word);
  const CyclePattern c = p.canonical();
  const auto b = blocks(c);
  std::cout << "canonical: " << c.word() << '\n';
  std::cout << "class: " << to_string(classify(p)) << '\n';
  std::cout << "blocks: [" << join(b.lengths) << "]\n";
  if (classify(p) == PatternClass::AlwaysAppears) std::cout << "route: " << to_string(dispatch_route(p)) << '\n';
  return kOk;
}

int cmd_suite(const std::string& id, const SuiteOptions& o) {
  const SuiteReport r = run_suite(id, o);
  std::cout << "suite " << r.id << " [" << r.parameters << "]: " << r.passed << "/" << r.trials << " passed in "
            << r.seconds << " s\n";
  for (const auto& f : r.failures) std::cout << "  failed: " << f << '\n';
  std::cout << (r.ok() ? "pass" : "FAIL") << '\n';
  return r.ok() ? kOk : kRejected;
}

int cmd_cert_verify(const std::string& cert_path, const std::string& file) {
  const Digraph d = load_digraph(file);
  const Json j = read_json(cert_path);
  std::vector<Json> certs;
  if (j.is_array()) {
    for (const auto& c : j) certs.push_back(c);
  } else {
    certs.push_back(j);
  }
  if (certs.empty()) throw ParseError(cert_path + ": no certificates");
  bool all_ok = true;
  for (const auto& c : certs) {
    const Replay r = verify_certificate(d, c);
    std::cout << (r.ok ? "valid: " : "INVALID: ") << r.message << '\n';
    all_ok = all_ok && r.ok;
  }
  return all_ok ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented cycles in dense digraphs of large chromatic number", "cyclelab"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a digraph");
  g->add_option("construction", gen.construction,
                "blowup | shift | gshift | augmented | balanced | random | complete | cycle | tournament")
      ->required();
  g->add_option("--k", gen.k, "cycle length (blowup) or half tuple length (gshift, augmented)");
  g->add_option("--blob", gen.blob, "blob size for blowup");
  g->add_option("--m", gen.m, "alphabet size (shift) or half alphabet size (gshift, augmented)");
  g->add_option("--r", gen.r, "tuple length for shift");
  g->add_option("--n", gen.n, "vertex count for random, complete, cycle, tournament");
  g->add_option("--p", gen.p, "arc probability for random");
  g->add_option("--min-out", gen.min_out, "minimum out-degree fraction for random");
  g->add_option("--seed", gen.seed, "seed for random");
  g->add_flag("--balance", gen.balance, "clone-balance the augmented construction");
  g->add_option("--cap", gen.cap, "vertex cap");
  g->add_option("--out", gen.out, "output digraph file")->required();
  g->add_option("--dot", gen.dot, "also write Graphviz");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Search for a cycle orientation or the forbidden family");
  c->add_option("file", check.file)->required()->check(CLI::ExistingFile);
  auto* pat = c->add_option("--pattern", check.pattern, "orientation word over + and -");
  auto* fam = c->add_option("--family", check.family, "check every directed and single-flip cycle up to this length");
  pat->excludes(fam);
  c->add_option("--budget", check.budget, "extension steps per pattern (0 = unlimited)");
  c->add_option("--out", check.out, "certificate output");

  ChiArgs chi;
  auto* h = app.add_subcommand("chi", "Chromatic number of the underlying graph");
  h->add_option("file", chi.file)->required()->check(CLI::ExistingFile);
  auto* exact_flag = h->add_flag("--exact", "branch and bound (default)");
  h->add_flag("--bounds", chi.bounds, "greedy sandwich only")->excludes(exact_flag);
  h->add_option("--budget", chi.budget, "search node budget (0 = unlimited)");
  h->add_option("--out", chi.out, "certificate output");

  ExtractArgs ex;
  auto* e = app.add_subcommand("extract", "Constructively find a cycle orientation");
  e->add_option("file", ex.file)->required()->check(CLI::ExistingFile);
  e->add_option("pattern", ex.pattern, "orientation word over + and -")->required();
  e->add_option("--epsilon", ex.epsilon, "minimum out-degree fraction, e.g. 0.3 or 3/10");
  e->add_option("--budget", ex.budget, "extension steps per path search");
  e->add_option("--chi-budget", ex.chi_budget, "node budget per exact colouring");
  e->add_option("--out", ex.out, "certificate output");
  e->add_option("--trace", ex.trace, "trace output");

  std::string word;
  auto* k = app.add_subcommand("classify", "Class and blocks of a cycle orientation");
  k->add_option("pattern", word, "orientation word over + and -")->required();

  std::string suite_id;
  SuiteOptions so;
  auto* s = app.add_subcommand("suite", "Run a property suite");
  s->add_option("id", suite_id, "cloning | gallai-roy | blowup | shift-chi")->required();
  s->add_option("--seed", so.seed);
  s->add_option("--trials", so.trials);
  s->add_option("--n", so.n, "size bound");
  s->add_option("--kmax", so.kmax);

  std::string cert_path, cert_input;
  auto* cert = app.add_subcommand("cert", "Certificates");
  cert->require_subcommand(1);
  auto* verify = cert->add_subcommand("verify", "Replay a certificate against its digraph");
  verify->add_option("certificate", cert_path)->required()->check(CLI::ExistingFile);
  verify->add_option("file", cert_input)->required()->check(CLI::ExistingFile);

  // CLI11 reserves a bare "++" as a subcommand terminator; it is a pattern here.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(std::string_view(argv[i]) == "++" ? "FF" : argv[i]);

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kInputError;
  }

  try {
    if (g->parsed()) return cmd_gen(gen);
    if (c->parsed()) {
      if (check.pattern.empty() && check.family == 0) throw ParameterRejected("give --pattern or --family");
      return cmd_check(check);
    }
    if (h->parsed()) return cmd_chi(chi);
    if (e->parsed()) return cmd_extract(ex);
    if (k->parsed()) return cmd_classify(word);
    if (s->parsed()) return cmd_suite(suite_id, so);
    if (verify->parsed()) return cmd_cert_verify(cert_path, cert_input);
  } catch (const PatternNotGuaranteed& err) {
    std::cerr << "pattern not guaranteed: " << err.what() << '\n';
    return kInputError;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
