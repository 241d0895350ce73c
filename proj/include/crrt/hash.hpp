#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "crrt/bytes.hpp"

namespace crrt {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

/// Incremental, length-prefixed hash accumulator used for Fiat-Shamir
/// challenges and key derivation. Every field is framed as
/// (u32 length || bytes) so distinct field sequences cannot collide.
class HashTranscript {
public:
    explicit HashTranscript(const std::string& domain_tag);

    HashTranscript& field(std::span<const std::uint8_t> data);
    HashTranscript& field(const Bytes& data);
    HashTranscript& field(const std::string& data);
    HashTranscript& field_u64(std::uint64_t v);

    Digest finish() const;

private:
    Bytes buf_;
};

}  // namespace crrt
