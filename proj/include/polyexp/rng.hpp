#pragma once

#include <cstdint>
#include <random>

#include "polyexp/rational.hpp"

namespace polyexp {

// Seeded generator whose draws depend only on the mt19937_64 stream, so
// reports are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // p/q with p in [-num_range, num_range], q in [1, den_range].
  Rational rational(std::int64_t num_range, std::int64_t den_range);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polyexp
