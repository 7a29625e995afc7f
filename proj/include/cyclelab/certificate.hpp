#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "cyclelab/chromatic.hpp"
#include "cyclelab/construct.hpp"
#include "cyclelab/extract.hpp"
#include "cyclelab/search.hpp"

namespace cyclelab {

using Json = nlohmann::ordered_json;

inline constexpr int kCertificateSchema = 1;
inline constexpr std::string_view kToolVersion = "cyclelab 1.0.0";

std::string sha256_hex(std::string_view bytes);
/// SHA-256 of the canonical text serialisation.
std::string digest(const Digraph& d);

Json embedding_certificate(const Digraph& d, const Embedding& e);
Json coloring_certificate(const Digraph& d, const ChromaticResult& r, ChromaticBudget budget);
/// Only for NotFound outcomes with an exhaustive search.
Json non_containment_certificate(const Digraph& d, const CyclePattern& p, const SearchOutcome& o, SearchBudget budget);
Json degree_audit_certificate(const Digraph& d);
Json extraction_certificate(const Digraph& d, const CyclePattern& p, const ExtractionResult& r,
                            const ExtractionParams& params);

Json to_json(const ExtractionTrace& t);
Json to_json(const AugmentedLayout& layout);
Json to_json(const BalanceAudit& audit);

struct Replay {
  bool ok = false;
  std::string message;
};

/// Re-derives the certificate's verdict against `d`. A digest mismatch fails.
Replay verify_certificate(const Digraph& d, const Json& cert);

}  // namespace cyclelab
