#include "crrt/pedersen.hpp"

#include <stdexcept>

namespace crrt {
namespace pedersen {

Commitment commit(const GroupParams& params, const Scalar& value, const Scalar& randomness) {
    return Commitment{params.mul(params.pow_g(value), params.pow_h(randomness))};
}

Commitment commit_random(const GroupParams& params, const Scalar& value, Rng& rng,
                         Opening& opening_out) {
    opening_out.value = value;
    opening_out.randomness = params.random_scalar(rng);
    return commit(params, opening_out.value, opening_out.randomness);
}

bool verify_opening(const GroupParams& params, const Commitment& commitment,
                    const Opening& opening) {
    return commit(params, opening.value, opening.randomness) == commitment;
}

Commitment combine(const GroupParams& params, const std::vector<Commitment>& commitments,
                   const std::vector<Scalar>& exponents) {
    if (commitments.empty()) throw std::invalid_argument("combine: empty commitment list");
    if (commitments.size() != exponents.size()) {
        throw std::invalid_argument("combine: length mismatch");
    }
    GroupElement acc = params.identity();
    for (std::size_t i = 0; i < commitments.size(); ++i) {
        acc = params.mul(acc, params.pow(commitments[i].element, exponents[i]));
    }
    return Commitment{acc};
}

Opening combine_openings(const GroupParams& params, const std::vector<Opening>& openings,
                         const std::vector<Scalar>& exponents) {
    if (openings.empty()) throw std::invalid_argument("combine_openings: empty opening list");
    if (openings.size() != exponents.size()) {
        throw std::invalid_argument("combine_openings: length mismatch");
    }
    Scalar value{0};
    Scalar randomness{0};
    for (std::size_t i = 0; i < openings.size(); ++i) {
        value = params.s_add(value, params.s_mul(exponents[i], openings[i].value));
        randomness = params.s_add(randomness, params.s_mul(exponents[i], openings[i].randomness));
    }
    return Opening{value, randomness};
}

}  // namespace pedersen
}  // namespace crrt
