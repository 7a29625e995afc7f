#include <algorithm>

#include "cyclelab/errors.hpp"
#include "cyclelab/extract.hpp"

namespace cyclelab {

namespace {

Rational surrogate(std::size_t order) { return Rational(burr_surrogate(order).surrogate_upper); }

Rational power(const Rational& base, std::size_t exponent) {
  Rational r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

Thresholds make(ExtractionRoute route, Rational n, Rational chi) {
  Thresholds t;
  t.route = route;
  t.min_n = ceil_rational(n);
  t.min_chi = ceil_rational(chi);
  t.min_n_exact = std::move(n);
  t.min_chi_exact = std::move(chi);
  return t;
}

}  // namespace

std::string_view to_string(ExtractionRoute r) {
  switch (r) {
    case ExtractionRoute::AlternatingMotif:
      return "rlrl";
    case ExtractionRoute::OpposingMotif:
      return "rrll";
    case ExtractionRoute::CohesiveSet:
      return "cohesive";
    case ExtractionRoute::ThreeBlocks:
      return "three-blocks";
    case ExtractionRoute::TwoBlocks:
      return "two-blocks";
  }
  return "?";
}

void validate(const ExtractionParams& params) {
  if (params.epsilon <= 0 || params.epsilon >= 1) {
    throw ParameterRejected("epsilon must lie strictly between 0 and 1, got " + to_string(params.epsilon));
  }
}

ExtractionRoute dispatch_route(const CyclePattern& p) {
  const PatternClass cls = classify(p);
  if (cls != PatternClass::AlwaysAppears) {
    throw PatternNotGuaranteed("pattern " + p.word() + " is " + std::string(to_string(cls)) +
                               ": dense digraphs of large chromatic number can avoid it; "
                               "see `cyclelab gen blowup` and `cyclelab gen balanced` for such digraphs");
  }
  if (contains_motif(p, motif_rlrl())) return ExtractionRoute::AlternatingMotif;
  if (blocks(p).count() == 2) return ExtractionRoute::TwoBlocks;
  if (contains_motif(p, motif_rrll())) return ExtractionRoute::OpposingMotif;
  return ExtractionRoute::ThreeBlocks;
}

Thresholds thresholds(const CyclePattern& p, const ExtractionParams& params) {
  validate(params);
  return route_thresholds(dispatch_route(p), p.length(), params);
}

Thresholds route_thresholds(ExtractionRoute route, std::size_t k, const ExtractionParams& params) {
  validate(params);
  if (k < 4) throw ParameterRejected("extraction routes need k >= 4");
  const Rational& eps = params.epsilon;
  const Rational c = surrogate(k - 1);
  switch (route) {
    case ExtractionRoute::AlternatingMotif:
      return make(route, Rational(12) / (eps * eps), 4 * c / eps);
    case ExtractionRoute::OpposingMotif:
    case ExtractionRoute::TwoBlocks:
      return make(route, Rational(48) / (eps * eps * eps), 16 * c / (eps * eps));
    case ExtractionRoute::ThreeBlocks: {
      if (eps * 2 >= 1) throw ParameterRejected("the block route needs epsilon < 1/2");
      const std::size_t exponent = static_cast<std::size_t>(ceil_rational(Rational(2) / eps));
      return make(route, Rational(48 * k) / (eps * eps * eps), 16 * c / (power(eps, exponent) * (1 - 2 * eps)));
    }
    case ExtractionRoute::CohesiveSet:
      break;
  }
  throw ParameterRejected("no threshold for this route");
}

Thresholds cohesive_thresholds(const Rational& epsilon, const Rational& c, std::size_t r, const Rational& m) {
  if (epsilon <= 0) throw ParameterRejected("epsilon must be positive");
  if (c <= 0 || c >= 1) throw ParameterRejected("c must lie strictly between 0 and 1");
  if (r == 0) throw ParameterRejected("r must be positive");
  const std::size_t l = static_cast<std::size_t>(ceil_rational(Rational(2) / epsilon));
  return make(ExtractionRoute::CohesiveSet, Rational(l * l * (r - 1)), m / power(c, l - 1));
}

}  // namespace cyclelab
