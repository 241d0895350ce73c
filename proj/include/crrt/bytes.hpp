#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crrt {

using Bytes = std::vector<std::uint8_t>;

/// Thrown when a byte buffer fails to parse as a protocol object.
struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

inline void append_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void append_u16_be(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline void append_u32_be(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline void append_u64_be(Bytes& out, std::uint64_t v) {
    append_u32_be(out, static_cast<std::uint32_t>(v >> 32));
    append_u32_be(out, static_cast<std::uint32_t>(v & 0xffffffffu));
}

inline void append_bytes(Bytes& out, std::span<const std::uint8_t> data) {
    out.insert(out.end(), data.begin(), data.end());
}

inline void append_bytes(Bytes& out, const std::string& s) {
    out.insert(out.end(), s.begin(), s.end());
}

/// Sequential reader over an immutable byte buffer. All reads throw
/// DecodeError on underflow; callers check exhausted() at the end.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint16_t u16_be() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }

    std::uint32_t u32_be() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
        pos_ += 4;
        return v;
    }

    std::uint64_t u64_be() {
        std::uint64_t hi = u32_be();
        return (hi << 32) | u32_be();
    }

    Bytes take(std::size_t n) {
        need(n);
        Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    bool exhausted() const { return pos_ == data_.size(); }

private:
    void need(std::size_t n) const {
        if (data_.size() - pos_ < n) throw DecodeError("byte buffer underflow");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(const std::string& hex);

}  // namespace crrt
