#include <cmath>
#include <unordered_set>

#include <Eigen/Dense>

#include "reconf/spectral.hpp"

namespace reconf {

namespace {

double residual(const RegularGraph& g, const Eigen::VectorXd& x, double lambda) {
  Eigen::VectorXd ax = Eigen::VectorXd::Zero(g.n);
  for (auto [u, v] : g.edges) {
    ax[u] += x[v];
    ax[v] += x[u];
  }
  return (ax - lambda * x).norm();
}

}  // namespace

ExpanderCertificate spectral_bound(const RegularGraph& g) {
  if (g.n < 1) throw DomainError("spectral_bound: empty graph");
  std::vector<int> degree(g.n, 0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    a(u, v) = a(v, u) = 1.0;
    ++degree[u];
    ++degree[v];
  }
  for (int deg : degree)
    if (deg != g.d) throw DomainError("spectral_bound: graph is not regular");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectral_bound: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();  // ascending
  const auto& vecs = solver.eigenvectors();
  ExpanderCertificate c;
  c.method = "dense symmetric eigensolver (Eigen SelfAdjointEigenSolver), residual max ||Ax - lx||";
  c.lambda_1 = ev[g.n - 1];
  c.residual = residual(g, vecs.col(g.n - 1), ev[g.n - 1]);
  double second = 0;
  if (g.n >= 2) {
    second = std::max(ev[g.n - 2], std::abs(ev[0]));
    c.residual = std::max({c.residual, residual(g, vecs.col(g.n - 2), ev[g.n - 2]), residual(g, vecs.col(0), ev[0])});
  }
  if (std::abs(c.lambda_1 - g.d) > 1e-8 * std::max(1, g.d))
    throw std::runtime_error("spectral_bound: top eigenvalue differs from the degree");
  c.lambda = second + c.residual;
  return c;
}

MixingResult mixing_check(const RegularGraph& g, double lambda, std::span<const int> s, std::span<const int> t) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::unordered_set<int> in_t(t.begin(), t.end());
  MixingResult r;
  for (int u : s)
    for (int v : adj.at(u)) r.edges_between += in_t.count(v);
  const long double ss = s.size(), tt = t.size();
  const long double lhs = std::fabs(static_cast<long double>(r.edges_between) - g.d * ss * tt / g.n);
  const long double rhs = lambda * std::sqrt(ss * tt);
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  r.holds = lhs <= rhs;
  return r;
}

}  // namespace reconf
