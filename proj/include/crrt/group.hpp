#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "crrt/bytes.hpp"
#include "crrt/rng.hpp"

namespace crrt {

/// Exponent in [0, q-1]. Constructed reduced; arithmetic lives on
/// GroupParams so the modulus is always explicit.
struct Scalar {
    mpz_class v;

    bool operator==(const Scalar&) const = default;
};

/// Member of the order-q subgroup of Z_p^*, as an integer in [1, p-1].
struct GroupElement {
    mpz_class v;

    bool operator==(const GroupElement&) const = default;
};

struct GroupError : std::runtime_error {
    explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

/// Public parameters (p, q, g, h): primes with q | p-1, and two
/// generators of the order-q subgroup whose mutual discrete log is
/// unknown (h is derived from g by hashing, so nobody picked it).
class GroupParams {
public:
    /// Deterministic parameter search. Throws GroupError if no primes
    /// are found within the iteration budget.
    static GroupParams generate(unsigned q_bits, unsigned p_bits, std::uint64_t seed);

    /// Small fixed group (7-bit q) for exhaustive and statistical tests.
    static const GroupParams& test_profile();

    /// 2048-bit p / 256-bit q production profile.
    static GroupParams secure_profile(std::uint64_t seed);

    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const GroupElement& g() const { return g_; }
    const GroupElement& h() const { return h_; }
    unsigned p_bits() const { return p_bits_; }
    unsigned q_bits() const { return q_bits_; }
    std::size_t element_width() const { return (p_bits_ + 7) / 8; }
    std::size_t scalar_width() const { return (q_bits_ + 7) / 8; }

    // ---- subgroup arithmetic ----
    GroupElement identity() const { return GroupElement{1}; }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement div(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& base, const Scalar& e) const;
    GroupElement pow_g(const Scalar& e) const { return pow(g_, e); }
    GroupElement pow_h(const Scalar& e) const { return pow(h_, e); }

    /// Order-q membership test: x in [1, p-1] and x^q = 1.
    bool is_member(const GroupElement& e) const;

    // ---- scalar arithmetic mod q ----
    Scalar scalar(const mpz_class& x) const;
    Scalar scalar_u64(std::uint64_t x) const { return scalar(mpz_class(static_cast<unsigned long>(x))); }
    Scalar s_add(const Scalar& a, const Scalar& b) const { return scalar(a.v + b.v); }
    Scalar s_sub(const Scalar& a, const Scalar& b) const { return scalar(a.v - b.v); }
    Scalar s_mul(const Scalar& a, const Scalar& b) const { return scalar(a.v * b.v); }
    Scalar s_neg(const Scalar& a) const { return scalar(-a.v); }
    Scalar s_inv(const Scalar& a) const;
    Scalar random_scalar(Rng& rng) const { return Scalar{rng.below(q_)}; }

    /// Scalar view of a group element's integer representative; this is
    /// how a transferred masking element becomes commitment randomness.
    Scalar element_mod_q(const GroupElement& e) const { return scalar(e.v); }

    /// Deterministic hash-to-subgroup: x = H(label, counter) mapped by
    /// x -> x^((p-1)/q), retried until the result is not 1.
    GroupElement hash_to_group(const std::string& label) const;

    // ---- canonical encoding ----
    Bytes encode_element(const GroupElement& e) const;
    GroupElement decode_element(std::span<const std::uint8_t> bytes) const;
    Bytes encode_scalar(const Scalar& s) const;
    Scalar decode_scalar(std::span<const std::uint8_t> bytes) const;

    /// Stable byte encoding of (p, q, g, h) for hashing into challenges.
    Bytes fingerprint() const;

    std::string to_json() const;
    static GroupParams from_json(const std::string& text);

    bool operator==(const GroupParams& other) const {
        return p_ == other.p_ && q_ == other.q_ && g_ == other.g_ && h_ == other.h_;
    }

private:
    GroupParams() = default;
    void derive_sizes();

    mpz_class p_;
    mpz_class q_;
    GroupElement g_;
    GroupElement h_;
    unsigned p_bits_ = 0;
    unsigned q_bits_ = 0;
};

}  // namespace crrt
