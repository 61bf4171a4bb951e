#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reconf/core.hpp"

namespace reconf {

struct RegularGraph {
  int n = 0;
  int d = 0;
  std::vector<std::pair<int, int>> edges;  // u < v
};

RegularGraph random_regular(int n, int d, std::uint64_t seed);
RegularGraph complete_graph(int n);
RegularGraph cycle_graph(int n);
bool is_connected(const RegularGraph& g);

struct ExpanderCertificate {
  double lambda = 0;       // max(lambda_2, |lambda_n|) + residual
  double lambda_1 = 0;
  double residual = 0;
  std::string method;
};

ExpanderCertificate spectral_bound(const RegularGraph& g);

struct MixingResult {
  double lhs = 0;
  double rhs = 0;
  std::int64_t edges_between = 0;
  bool holds = false;
};

MixingResult mixing_check(const RegularGraph& g, double lambda, std::span<const int> s, std::span<const int> t);

enum class ExpanderSource { CompleteOnly, VerifiedRandomRegular };

struct DegreeReductionParams {
  Rational epsilon{1, 3};
  Rational delta{1, 24};
  int d0 = 82944;
  std::optional<int> cloud_threshold;  // empty: every cloud is complete
  ExpanderSource expander_source = ExpanderSource::CompleteOnly;
  std::uint64_t seed = 0;
  int retry_budget = 32;

  // epsilon <- 1/ceil(1/epsilon), delta = epsilon/8, d0 = smallest even integer >= 9216/epsilon^2.
  static DegreeReductionParams from_epsilon(const Rational& epsilon_input, std::uint64_t seed = 0);
};

struct CloudGraph {
  int size = 0;
  std::vector<std::pair<int, int>> edges;
  bool complete = true;
  std::optional<ExpanderCertificate> certificate;
};

CloudGraph make_cloud(int size, const DegreeReductionParams& params);

}  // namespace reconf
