#include "polyexp/rng.hpp"

#include "polyexp/errors.hpp"

namespace polyexp {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Rational Rng::rational(std::int64_t num_range, std::int64_t den_range) {
  std::int64_t p = uniform(-num_range, num_range);
  std::int64_t q = uniform(1, den_range);
  return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
}

}  // namespace polyexp
