#include "cyclelab/certificate.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <memory>

#include "cyclelab/digraph_io.hpp"
#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

Json header(const Digraph& d, std::string_view kind) {
  Json j;
  j["schema"] = kCertificateSchema;
  j["kind"] = kind;
  j["tool"] = kToolVersion;
  j["input_sha256"] = digest(d);
  j["vertices"] = d.vertex_count();
  j["arcs"] = d.arc_count();
  return j;
}

Json degree_summary(const Digraph& d) {
  Json j;
  j["min_out_degree"] = d.empty() ? 0 : min_out_degree(d);
  j["min_in_degree"] = d.empty() ? 0 : min_in_degree(d);
  j["max_out_degree"] = d.empty() ? 0 : max_out_degree(d);
  Json hist = Json::array();
  for (const auto& [deg, count] : out_degree_histogram(d)) hist.push_back({deg, count});
  j["out_degree_histogram"] = hist;
  return j;
}

ExtractionParams params_from(const Json& j) {
  ExtractionParams p;
  p.epsilon = parse_rational(j.at("epsilon").get<std::string>());
  p.search.steps = j.at("search_steps").get<std::uint64_t>();
  p.chromatic.nodes = j.at("chromatic_nodes").get<std::uint64_t>();
  p.max_restarts = j.at("max_restarts").get<std::size_t>();
  p.path_candidates = j.at("path_candidates").get<std::size_t>();
  return p;
}

Json params_json(const ExtractionParams& p) {
  return Json{{"epsilon", to_string(p.epsilon)},
              {"search_steps", p.search.steps},
              {"chromatic_nodes", p.chromatic.nodes},
              {"max_restarts", p.max_restarts},
              {"path_candidates", p.path_candidates}};
}

Replay pass(std::string m) { return {true, std::move(m)}; }
Replay reject(std::string m) { return {false, std::move(m)}; }

Replay replay_embedding(const Digraph& d, const Json& j) {
  const auto word = parse_word(j.at("word").get<std::string>());
  Embedding e{word, j.at("cyclic").get<bool>(), j.at("map").get<std::vector<Vertex>>()};
  return verify_embedding(d, e) ? pass("embedding verified") : reject("embedding does not map the pattern into the digraph");
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string digest(const Digraph& d) { return sha256_hex(to_text(d)); }

Json embedding_certificate(const Digraph& d, const Embedding& e) {
  Json j = header(d, "embedding");
  j["word"] = format_word(e.word);
  j["cyclic"] = e.cyclic;
  j["map"] = e.map;
  return j;
}

Json coloring_certificate(const Digraph& d, const ChromaticResult& r, ChromaticBudget budget) {
  Json j = header(d, "coloring");
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["exact"] = r.exact;
  j["budget_exhausted"] = r.budget_exhausted;
  j["node_budget"] = budget.nodes;
  j["nodes"] = r.nodes;
  j["coloring"] = r.witness_coloring.color;
  j["clique"] = r.witness_clique;
  return j;
}

Json non_containment_certificate(const Digraph& d, const CyclePattern& p, const SearchOutcome& o, SearchBudget budget) {
  if (o.status != SearchStatus::NotFound || !o.exhaustive) {
    throw ParameterRejected("non-containment certificates need an exhaustive NotFound outcome");
  }
  Json j = header(d, "non-containment");
  j["pattern"] = p.word();
  j["step_budget"] = budget.steps;
  j["steps"] = o.steps;
  return j;
}

Json degree_audit_certificate(const Digraph& d) {
  Json j = header(d, "degree-audit");
  j["audit"] = degree_summary(d);
  return j;
}

Json to_json(const ExtractionTrace& t) {
  Json j;
  j["route"] = to_string(t.route);
  j["input_word"] = t.input_word;
  j["working_word"] = t.working_word;
  j["transform"] = {{"reflected", t.transform.reflected}, {"offset", t.transform.offset}};
  if (t.thresholds) {
    j["thresholds"] = {{"min_n", t.thresholds->min_n.str()},
                       {"min_chi", t.thresholds->min_chi.str()},
                       {"min_n_exact", to_string(t.thresholds->min_n_exact)},
                       {"min_chi_exact", to_string(t.thresholds->min_chi_exact)},
                       {"met", t.thresholds_met}};
  }
  j["n"] = t.n;
  j["min_out_degree"] = t.min_out_degree;
  j["sequence"] = t.sequence;
  Json fam = Json::array();
  for (const auto& s : t.families) fam.push_back({{"size", s.size()}, {"members", s}});
  j["families"] = fam;
  Json sets = Json::array();
  for (const auto& s : t.sets) {
    sets.push_back({{"name", s.name},
                    {"size", s.members.size()},
                    {"chi_lower", s.chi_lower},
                    {"chi_upper", s.chi_upper},
                    {"members", s.members}});
  }
  j["sets"] = sets;
  j["restarts"] = t.restarts;
  j["events"] = t.events;
  return j;
}

Json extraction_certificate(const Digraph& d, const CyclePattern& p, const ExtractionResult& r,
                            const ExtractionParams& params) {
  Json j = header(d, "extraction-trace");
  j["pattern"] = p.word();
  j["params"] = params_json(params);
  j["status"] = r.found() ? "Found" : "Failed";
  if (r.embedding) j["embedding"] = {{"word", format_word(r.embedding->word)}, {"cyclic", true}, {"map", r.embedding->map}};
  j["trace"] = to_json(r.trace);
  return j;
}

Json to_json(const AugmentedLayout& layout) {
  Json j;
  j["m"] = layout.m;
  j["k"] = layout.k;
  j["q"] = layout.q;
  Json sizes;
  Json rounds;
  for (std::size_t g = 0; g < 4; ++g) {
    sizes[std::string(to_string(kGroups[g]))] = layout.group_size(kGroups[g]);
    rounds[std::string(to_string(kGroups[g]))] = layout.rounds[g];
  }
  j["group_sizes"] = sizes;
  j["doubling_rounds"] = rounds;
  Json parts = Json::array();
  for (const auto& a : layout.partitions) parts.push_back(a);
  j["partitions"] = parts;
  Json vertices = Json::array();
  for (Vertex v = 0; v < layout.group.size(); ++v) {
    Json e{{"group", to_string(layout.group[v])}, {"generation", layout.generation[v]}, {"origin", layout.origin[v]}};
    if (layout.partition[v] >= 0) e["partition"] = layout.partition[v];
    if (layout.path_position[v] >= 0) e["path_position"] = layout.path_position[v] + 1;
    vertices.push_back(std::move(e));
  }
  j["vertices"] = vertices;
  return j;
}

Json to_json(const BalanceAudit& a) {
  Json sizes;
  for (std::size_t g = 0; g < 4; ++g) sizes[std::string(to_string(kGroups[g]))] = a.group_sizes[g];
  return Json{{"vertices", a.vertex_count},
              {"group_sizes", sizes},
              {"min_out_degree", a.min_out_degree},
              {"min_t_into_core", a.min_t_into_core},
              {"min_core_into_s", a.min_core_into_s},
              {"groups_ok", a.groups_ok},
              {"min_degree_ok", a.min_degree_ok},
              {"t_fraction_ok", a.t_fraction_ok},
              {"core_fraction_ok", a.core_fraction_ok}};
}

Replay verify_certificate(const Digraph& d, const Json& cert) {
  try {
    if (cert.at("schema").get<int>() != kCertificateSchema) return reject("unsupported schema version");
    if (cert.at("input_sha256").get<std::string>() != digest(d)) return reject("input digest mismatch");
    const auto kind = cert.at("kind").get<std::string>();

    if (kind == "embedding") return replay_embedding(d, cert);

    if (kind == "coloring") {
      Coloring c{cert.at("coloring").get<std::vector<std::uint32_t>>(), cert.at("upper").get<std::size_t>()};
      const auto clique = cert.at("clique").get<std::vector<Vertex>>();
      const auto lower = cert.at("lower").get<std::size_t>();
      if (!d.empty() && !is_proper(d, c)) return reject("colouring is not proper with the stated colour count");
      if (!is_clique(d, clique)) return reject("clique witness is not a clique");
      if (clique.size() > lower || lower > c.color_count) return reject("bounds are inconsistent with the witnesses");
      if (clique.size() < lower) {
        // The lower bound came from an exhausted search; re-run it.
        const ChromaticResult again = chromatic_exact(d, {cert.at("node_budget").get<std::uint64_t>()});
        if (!again.exact || again.lower != lower) return reject("re-running the exact search did not reproduce the bound");
      }
      return pass("colouring verified: " + std::to_string(lower) + " <= chi <= " + std::to_string(c.color_count));
    }

    if (kind == "non-containment") {
      const CyclePattern p = CyclePattern::parse(cert.at("pattern").get<std::string>());
      const SearchOutcome o = contains_pattern(d, p, {cert.at("step_budget").get<std::uint64_t>()});
      if (o.status == SearchStatus::NotFound && o.exhaustive) return pass("exhaustive search reproduced: " + p.word() + " absent");
      return reject("search re-run did not reproduce exhaustive absence of " + p.word());
    }

    if (kind == "degree-audit") {
      if (cert.at("audit") != degree_summary(d)) return reject("degree audit differs");
      return pass("degree audit reproduced");
    }

    if (kind == "extraction-trace") {
      const CyclePattern p = CyclePattern::parse(cert.at("pattern").get<std::string>());
      const ExtractionResult r = extract_any(d, p, params_from(cert.at("params")));
      const std::string status = r.found() ? "Found" : "Failed";
      if (status != cert.at("status").get<std::string>()) return reject("extraction re-run gave " + status);
      if (r.found()) {
        Json e{{"word", format_word(r.embedding->word)}, {"cyclic", true}, {"map", r.embedding->map}};
        if (e != cert.at("embedding")) return reject("extraction re-run produced a different embedding");
        const Replay rep = replay_embedding(d, cert.at("embedding"));
        if (!rep.ok) return rep;
      }
      return pass("extraction re-run reproduced status " + status);
    }
    return reject("unknown certificate kind '" + kind + "'");
  } catch (const Json::exception& e) {
    return reject(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    return reject(std::string("certificate rejected: ") + e.what());
  }
}

}  // namespace cyclelab
