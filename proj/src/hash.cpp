#include "crrt/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace crrt {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("sha256 failed");
    }
    return out;
}

HashTranscript::HashTranscript(const std::string& domain_tag) {
    append_u32_be(buf_, static_cast<std::uint32_t>(domain_tag.size()));
    append_bytes(buf_, domain_tag);
}

HashTranscript& HashTranscript::field(std::span<const std::uint8_t> data) {
    append_u32_be(buf_, static_cast<std::uint32_t>(data.size()));
    append_bytes(buf_, data);
    return *this;
}

HashTranscript& HashTranscript::field(const Bytes& data) {
    return field(std::span<const std::uint8_t>(data));
}

HashTranscript& HashTranscript::field(const std::string& data) {
    append_u32_be(buf_, static_cast<std::uint32_t>(data.size()));
    append_bytes(buf_, data);
    return *this;
}

HashTranscript& HashTranscript::field_u64(std::uint64_t v) {
    append_u32_be(buf_, 8);
    append_u64_be(buf_, v);
    return *this;
}

Digest HashTranscript::finish() const { return sha256(buf_); }

std::string to_hex(std::span<const std::uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw DecodeError("invalid hex character");
}

Bytes from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw DecodeError("odd-length hex string");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>(hex_nibble(hex[i]) << 4 | hex_nibble(hex[i + 1])));
    }
    return out;
}

}  // namespace crrt
