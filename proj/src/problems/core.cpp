#include "reconf/core.hpp"

#include <charconv>

namespace reconf {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("malformed rational: " + std::string(whole));
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator: " + std::string(text));
  return Rational(parse_int(text.substr(0, slash), text), den);
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

SequenceError::SequenceError(std::size_t index, const std::string& what)
    : DomainError(what + " (state " + std::to_string(index) + ")"), index_(index) {}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Csp: return "csp";
    case ProblemKind::Sat: return "sat";
    case ProblemKind::Ncl: return "ncl";
    case ProblemKind::IndependentSet: return "isr";
    case ProblemKind::VertexCover: return "vcr";
    case ProblemKind::Clique: return "clique";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
  for (auto k : {ProblemKind::Csp, ProblemKind::Sat, ProblemKind::Ncl, ProblemKind::IndependentSet,
                 ProblemKind::VertexCover, ProblemKind::Clique})
    if (to_string(k) == name) return k;
  throw DomainError("unknown problem kind: " + std::string(name));
}

}  // namespace reconf
