#include "crrt/rng.hpp"

#include "crrt/hash.hpp"

namespace crrt {

Rng Rng::from_entropy() {
    std::random_device rd;
    std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    return Rng(seed);
}

Rng Rng::derive(const std::string& label, std::uint64_t index) const {
    Digest d = HashTranscript("crrt/rng-derive/v1")
                   .field_u64(seed_)
                   .field(label)
                   .field_u64(index)
                   .finish();
    std::uint64_t sub = 0;
    for (int i = 0; i < 8; ++i) sub = (sub << 8) | d[i];
    return Rng(sub);
}

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    return dist(engine_);
}

double Rng::real01() {
    // 53-bit mantissa; avoids distribution-object implementation drift.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // 64 slack bits make the mod-bias negligible for any bound size.
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 64;
    std::size_t words = (bits + 63) / 64;
    mpz_class acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        std::uint64_t w = engine_();
        mpz_class word;
        mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        acc += word;
    }
    return acc % bound;
}

}  // namespace crrt
