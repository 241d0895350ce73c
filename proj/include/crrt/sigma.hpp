#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "crrt/group.hpp"
#include "crrt/pedersen.hpp"

namespace crrt {
namespace sigma {

using pedersen::Commitment;
using pedersen::Opening;

/// Three-move statement with honest-verifier simulation. Compound
/// statements (AND/OR over sub-statements) share one challenge, which
/// is what makes CDS disjunctions and Fiat-Shamir compilation work.
///
/// Prover-side instances carry witnesses; verifier-side instances are
/// built from public data only and may only verify/simulate.
class Statement {
public:
    virtual ~Statement() = default;

    virtual std::size_t announcement_size() const = 0;
    virtual std::size_t response_size() const = 0;

    /// First move. Draws nonces; call respond() exactly once afterwards.
    virtual void commit(Rng& rng, std::vector<GroupElement>& announcements) = 0;
    virtual void respond(const Scalar& challenge, std::vector<Scalar>& responses) = 0;

    virtual bool verify(std::span<const GroupElement> announcements, const Scalar& challenge,
                        std::span<const Scalar> responses) const = 0;

    /// Sample an accepting transcript for a fixed challenge.
    virtual void simulate(const Scalar& challenge, Rng& rng,
                          std::vector<GroupElement>& announcements,
                          std::vector<Scalar>& responses) const = 0;
};

using StatementPtr = std::unique_ptr<Statement>;

// ---- statement factories ----------------------------------------------

/// Knowledge of w with target = h^w.
StatementPtr make_h_dlog(const GroupParams& params, const GroupElement& target,
                         std::optional<Scalar> witness);

/// Knowledge of (value, randomness) opening y.
StatementPtr make_opening(const GroupParams& params, const Commitment& y,
                          std::optional<Opening> opening);

/// y commits to one of the listed values (CDS disjunction of h-dlog
/// statements on y/g^m). witness_index selects the true branch.
StatementPtr make_value_in_set(const GroupParams& params, const Commitment& y,
                               const std::vector<Scalar>& allowed,
                               std::optional<std::pair<std::size_t, Opening>> witness);

/// y commits to 0 or 1.
StatementPtr make_boolean(const GroupParams& params, const Commitment& y,
                          std::optional<Opening> opening);

/// Conjunction; children share the challenge.
StatementPtr make_and(std::vector<StatementPtr> children);

/// CDS disjunction; true_index picks the honestly-answered child.
StatementPtr make_or(const GroupParams& params, std::vector<StatementPtr> children,
                     std::optional<std::size_t> true_index);

/// y commits to a value in [0, bound-1], by double bit decomposition:
/// bits of the value and of bound-1-value, each proven Boolean, both
/// recompositions tied to y homomorphically. Requires 4*bound <= q.
StatementPtr make_range(const GroupParams& params, const Commitment& y, const mpz_class& bound,
                        std::optional<Opening> opening);

/// Committed indicator b equals [z < threshold] for committed z in
/// [0, modulus-1]:  (b=1 and z in [0,threshold-1]) or (b=0 and z in
/// [threshold, modulus-1]).
StatementPtr make_threshold_indicator(const GroupParams& params, const Commitment& yb,
                                      const Commitment& yz, std::uint32_t threshold,
                                      std::uint32_t modulus,
                                      std::optional<std::pair<Opening, Opening>> openings);

// ---- Fiat-Shamir transcripts -------------------------------------------

enum class ArgType : std::uint8_t {
    opening = 1,
    boolean_vec = 2,
    linear = 3,
    value_in_set = 4,
    range = 5,
    threshold_indicator = 6,
    h_dlog = 7,
};

struct ArgumentTranscript {
    ArgType arg_type;
    Bytes statement_tag;
    std::vector<GroupElement> refs;
    std::vector<GroupElement> announcements;
    Scalar challenge;
    std::vector<Scalar> responses;

    Bytes serialize(const GroupParams& params) const;
    static ArgumentTranscript parse(const GroupParams& params, std::span<const std::uint8_t> data);

    bool operator==(const ArgumentTranscript&) const = default;
};

/// Challenge = H(domain, params, type, tag, refs, announcements, context) mod q.
Scalar fs_challenge(const GroupParams& params, ArgType type, const Bytes& statement_tag,
                    std::span<const GroupElement> refs,
                    std::span<const GroupElement> announcements,
                    std::span<const std::uint8_t> context);

ArgumentTranscript fs_prove(const GroupParams& params, ArgType type, Bytes statement_tag,
                            std::vector<GroupElement> refs, Statement& stmt,
                            std::span<const std::uint8_t> context, Rng& rng);

/// Recomputes the challenge and runs the statement verifier. The caller
/// must pass a statement built from its own view of the public inputs,
/// and expected_refs/tag from the same; transcript fields are compared
/// against them so a transcript cannot smuggle substitute statements.
bool fs_verify(const GroupParams& params, const ArgumentTranscript& transcript, ArgType type,
               const Bytes& expected_tag, std::span<const GroupElement> expected_refs,
               const Statement& stmt, std::span<const std::uint8_t> context);

// ---- spec-level arguments ------------------------------------------------

ArgumentTranscript prove_opening(const GroupParams& params, const Commitment& y,
                                 const Opening& opening, std::span<const std::uint8_t> context,
                                 Rng& rng);
bool verify_opening_arg(const GroupParams& params, const Commitment& y,
                        const ArgumentTranscript& transcript,
                        std::span<const std::uint8_t> context);

/// Batched AK-Boolean over y_1..y_k.
ArgumentTranscript prove_boolean(const GroupParams& params, const std::vector<Commitment>& ys,
                                 const std::vector<Opening>& openings,
                                 std::span<const std::uint8_t> context, Rng& rng);
bool verify_boolean(const GroupParams& params, const std::vector<Commitment>& ys,
                    const ArgumentTranscript& transcript, std::span<const std::uint8_t> context);

/// AK-Lin: sum_{i<=n} mu_i + a*mu_{n+1} = b over y_1..y_{n+1}, realized
/// as an h-dlog proof on (prod y_i * y_{n+1}^a) / g^b.
ArgumentTranscript prove_lin(const GroupParams& params, const std::vector<Commitment>& ys,
                             const std::vector<Opening>& openings, const Scalar& a,
                             const Scalar& b, std::span<const std::uint8_t> context, Rng& rng);
bool verify_lin(const GroupParams& params, const std::vector<Commitment>& ys, const Scalar& a,
                const Scalar& b, const ArgumentTranscript& transcript,
                std::span<const std::uint8_t> context);

ArgumentTranscript prove_value_in_set(const GroupParams& params, const Commitment& y,
                                      const Opening& opening, const std::vector<Scalar>& allowed,
                                      std::span<const std::uint8_t> context, Rng& rng);
bool verify_value_in_set(const GroupParams& params, const Commitment& y,
                         const std::vector<Scalar>& allowed,
                         const ArgumentTranscript& transcript,
                         std::span<const std::uint8_t> context);

ArgumentTranscript prove_range(const GroupParams& params, const Commitment& y,
                               const Opening& opening, const mpz_class& bound,
                               std::span<const std::uint8_t> context, Rng& rng);
bool verify_range(const GroupParams& params, const Commitment& y, const mpz_class& bound,
                  const ArgumentTranscript& transcript, std::span<const std::uint8_t> context);

/// Generic h-dlog argument with a caller-supplied statement tag; used
/// by protocol-level relation proofs over homomorphic combinations.
ArgumentTranscript prove_h_dlog_arg(const GroupParams& params, const GroupElement& target,
                                    const Scalar& witness, Bytes statement_tag,
                                    std::vector<GroupElement> refs,
                                    std::span<const std::uint8_t> context, Rng& rng);
bool verify_h_dlog_arg(const GroupParams& params, const GroupElement& target,
                       const Bytes& statement_tag, std::span<const GroupElement> refs,
                       const ArgumentTranscript& transcript,
                       std::span<const std::uint8_t> context);

ArgumentTranscript prove_threshold_indicator(const GroupParams& params, const Commitment& yb,
                                             const Commitment& yz, std::uint32_t threshold,
                                             std::uint32_t modulus, const Opening& opening_b,
                                             const Opening& opening_z,
                                             std::span<const std::uint8_t> context, Rng& rng);
bool verify_threshold_indicator(const GroupParams& params, const Commitment& yb,
                                const Commitment& yz, std::uint32_t threshold,
                                std::uint32_t modulus, const ArgumentTranscript& transcript,
                                std::span<const std::uint8_t> context);

// ---- Schnorr signatures ---------------------------------------------------

struct SigningKey {
    Scalar secret;
    GroupElement public_point;
};

struct VerifyKey {
    GroupElement point;

    bool operator==(const VerifyKey&) const = default;
};

struct Signature {
    Scalar e;
    Scalar s;

    bool operator==(const Signature&) const = default;
};

SigningKey keygen(const GroupParams& params, Rng& rng);
Signature sign(const GroupParams& params, const SigningKey& key,
               std::span<const std::uint8_t> message);
bool verify_sig(const GroupParams& params, const VerifyKey& key,
                std::span<const std::uint8_t> message, const Signature& signature);

}  // namespace sigma
}  // namespace crrt
