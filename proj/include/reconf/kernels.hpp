#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "reconf/problems.hpp"

namespace reconf::kernels {

// Mixed-radix encoding of states; position 0 is least significant.
class Lattice {
 public:
  explicit Lattice(std::vector<std::uint32_t> radix);

  std::size_t positions() const { return radix_.size(); }
  std::uint64_t size() const { return size_; }
  std::uint32_t radix(std::size_t p) const { return radix_[p]; }
  std::uint64_t stride(std::size_t p) const { return stride_[p]; }
  std::uint32_t digit(std::uint64_t code, std::size_t p) const {
    return static_cast<std::uint32_t>((code / stride_[p]) % radix_[p]);
  }

  template <class F>
  void for_each_neighbor(std::uint64_t code, F&& f) const {
    for (std::size_t p = 0; p < radix_.size(); ++p) {
      const auto d = digit(code, p);
      const auto base = code - d * stride_[p];
      for (std::uint32_t e = 0; e < radix_[p]; ++e)
        if (e != d) f(base + e * stride_[p]);
    }
  }

 private:
  std::vector<std::uint32_t> radix_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_;
};

// Integer score of every encoded state; -1 marks an infeasible state.
class ScoreModel {
 public:
  virtual ~ScoreModel() = default;
  const Lattice& lattice() const { return lattice_; }
  virtual std::int32_t score(std::uint64_t code) const = 0;
  virtual std::uint64_t encode(const State& s) const = 0;
  virtual State decode(std::uint64_t code) const = 0;

 protected:
  explicit ScoreModel(Lattice lattice) : lattice_(std::move(lattice)) {}
  Lattice lattice_;
};

std::unique_ptr<ScoreModel> make_score_model(const ReconfigInstance& instance);

struct Threshold {
  std::int32_t value;
  bool minimize;
  bool admits(std::int32_t s) const { return s >= 0 && (minimize ? s <= value : s >= value); }
};

void tabulate_serial(const ScoreModel& model, std::span<std::int32_t> out);
void tabulate_parallel(const ScoreModel& model, std::span<std::int32_t> out);

// Level-synchronous BFS over admissible states. Stops after the level that
// reaches target; dist is -1 for undiscovered states.
std::vector<std::int32_t> bfs_serial(const Lattice& lattice, std::span<const std::int32_t> scores, Threshold th,
                                     std::uint64_t source, std::uint64_t target);
std::vector<std::int32_t> bfs_parallel(const Lattice& lattice, std::span<const std::int32_t> scores, Threshold th,
                                       std::uint64_t source, std::uint64_t target);

// Walks back from target choosing the smallest-code predecessor.
std::vector<std::uint64_t> trace_path(const Lattice& lattice, std::span<const std::int32_t> dist,
                                      std::uint64_t target);

}  // namespace reconf::kernels
