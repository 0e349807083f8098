#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace kantor {

/// Worker count: KANTOR_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

/// Runs body(k) for k in [0, n) over thread_count() workers. Exceptions from
/// the body are rethrown after all workers join (the lowest failing k wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Deterministic 64-bit generator (splitmix64); identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

}  // namespace kantor
