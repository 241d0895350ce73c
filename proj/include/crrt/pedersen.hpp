#pragma once

#include <vector>

#include "crrt/group.hpp"

namespace crrt {
namespace pedersen {

/// g^value * h^randomness. Only the group element travels in protocol
/// messages; openings are held by whoever must later prove something.
struct Commitment {
    GroupElement element;

    bool operator==(const Commitment&) const = default;
};

struct Opening {
    Scalar value;
    Scalar randomness;
};

Commitment commit(const GroupParams& params, const Scalar& value, const Scalar& randomness);

Commitment commit_random(const GroupParams& params, const Scalar& value, Rng& rng,
                         Opening& opening_out);

bool verify_opening(const GroupParams& params, const Commitment& commitment,
                    const Opening& opening);

/// prod c_i^{e_i}. The combined opening is (sum e_i*value_i, sum e_i*rand_i).
Commitment combine(const GroupParams& params, const std::vector<Commitment>& commitments,
                   const std::vector<Scalar>& exponents);

Opening combine_openings(const GroupParams& params, const std::vector<Opening>& openings,
                         const std::vector<Scalar>& exponents);

}  // namespace pedersen
}  // namespace crrt
