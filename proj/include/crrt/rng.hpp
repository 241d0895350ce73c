#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace crrt {

/// Deterministic random source. One instance per protocol role per
/// session; derive() yields an independent stream for a labeled
/// sub-task so that session outcomes are reproducible from a master
/// seed regardless of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static Rng from_entropy();

    /// Independent stream keyed by (this stream's seed, label, index).
    Rng derive(const std::string& label, std::uint64_t index) const;

    std::uint64_t u64() { return engine_(); }

    bool coin() { return (engine_() & 1u) != 0; }

    /// Uniform integer in [lo, hi] inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    /// Uniform double in [0, 1).
    double real01();

    /// Uniform mpz in [0, bound-1]. bound must be positive.
    mpz_class below(const mpz_class& bound);

private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace crrt
