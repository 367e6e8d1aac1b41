#include "selkow/rng.hpp"

#include <cmath>

namespace selkow {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + (index + 1) * kGolden);
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    // arc4random_uniform scheme: reject draws below 2^64 mod bound.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) return r % bound;
    }
}

bool bernoulli(std::mt19937_64& gen, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const auto threshold = static_cast<std::uint64_t>(std::llround(std::ldexp(p, 53)));
    return (gen() >> 11) < threshold;
}

}  // namespace selkow
