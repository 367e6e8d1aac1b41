// Deterministic randomness primitives. Every consumer draws from
// std::mt19937_64 (sequence pinned by the C++ standard) through the helpers
// below, so identical seeds give identical results on every platform.
#pragma once

#include <cstdint>
#include <random>

namespace selkow {

// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t z);

// O(1) access into the splitmix64 stream seeded by `master`: the seed for
// trial t is independent of all other trials, so trials can run in any order
// or in parallel without changing results.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

// Unbiased draw from [0, bound) by rejection (bound >= 1).
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

// Bernoulli(p) decided by comparing the top 53 bits of one draw against
// round(p * 2^53); exact for p in {0,1} and deterministic everywhere.
bool bernoulli(std::mt19937_64& gen, double p);

}  // namespace selkow
