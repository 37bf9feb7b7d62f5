#pragma once

#include <cstdint>

namespace covpack {

// splitmix64 finalizer; good avalanche, cheap.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Counter-based pseudorandom stream.
 *
 * Value i of a stream is mix64(key ^ i), where the key is derived from the
 * (seed, node, round) triple. Streams are stateless apart from the counter,
 * so a node's draws in a given round do not depend on execution order, and
 * identical seeds reproduce identical runs bit for bit on any platform
 * (no implementation-defined std:: distributions are involved).
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : key_(mix64(seed)) {}

    RngStream(std::uint64_t seed, std::uint64_t node, std::uint64_t round)
        : key_(mix64(mix64(mix64(seed) + 0x6a09e667f3bcc909ULL * node) +
                     0xbb67ae8584caa73bULL * round)) {}

    std::uint64_t next_u64() { return mix64(key_ ^ counter_++); }

    // [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // uniform in [0, n); multiply-shift, bias < n / 2^64
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // uniform in [lo, hi] inclusive
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform_int(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() >> 63) != 0; }

    // number of failures before first success, Pr[success] = q per trial
    int geometric(double q, int cap) {
        int r = 0;
        while (r < cap && uniform01() >= q) ++r;
        return r;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace covpack
