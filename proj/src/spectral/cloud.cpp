#include <cmath>

#include "reconf/spectral.hpp"

namespace reconf {

DegreeReductionParams DegreeReductionParams::from_epsilon(const Rational& epsilon_input, std::uint64_t seed) {
  if (epsilon_input <= 0 || epsilon_input >= 1) throw DomainError("epsilon must lie in (0,1)");
  DegreeReductionParams p;
  const auto inv = Rational(1) / epsilon_input;
  auto c = inv.numerator() / inv.denominator();
  if (c * inv.denominator() != inv.numerator()) ++c;
  p.epsilon = Rational(1, c);
  p.delta = p.epsilon / 8;
  auto d0 = 9216 * c * c;
  if (d0 % 2) ++d0;
  p.d0 = static_cast<int>(d0);
  p.seed = seed;
  return p;
}

CloudGraph make_cloud(int size, const DegreeReductionParams& params) {
  if (size < 1) throw DomainError("make_cloud: size must be positive");
  CloudGraph c;
  c.size = size;
  const bool complete = params.expander_source == ExpanderSource::CompleteOnly || !params.cloud_threshold ||
                        size < *params.cloud_threshold;
  if (complete) {
    for (int u = 0; u < size; ++u)
      for (int v = u + 1; v < size; ++v) c.edges.emplace_back(u, v);
    return c;
  }
  const double bound = 2.0 * std::sqrt(static_cast<double>(params.d0));
  for (int attempt = 0; attempt < params.retry_budget; ++attempt) {
    auto g = random_regular(size, params.d0, params.seed + 7919ULL * static_cast<std::uint64_t>(attempt));
    auto cert = spectral_bound(g);
    if (cert.lambda <= bound) {
      c.edges = std::move(g.edges);
      c.complete = false;
      c.certificate = cert;
      return c;
    }
  }
  throw std::runtime_error("make_cloud: expander certification failed within the retry budget");
}

}  // namespace reconf
