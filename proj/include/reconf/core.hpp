#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace reconf {

using Rational = boost::rational<std::int64_t>;

// "p/q" or "p"
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step of a sequence that breaks validity; index is the offending state.
class SequenceError : public DomainError {
 public:
  SequenceError(std::size_t index, const std::string& what);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// One entry per position. CSP: alphabet index per vertex. SAT: 1 = T.
// NCL: 1 = link points at its second endpoint. Set problems: membership bit.
using State = std::vector<std::uint8_t>;
using ReconfigSequence = std::vector<State>;

enum class ProblemKind { Csp, Sat, Ncl, IndependentSet, VertexCover, Clique };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view name);

}  // namespace reconf
