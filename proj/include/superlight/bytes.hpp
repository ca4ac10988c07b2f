#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace superlight {

using Bytes = std::vector<uint8_t>;

/// 32-byte opaque digest. Equality is byte equality.
struct Hash256 {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Hash256&) const = default;

    bool is_zero() const {
        for (auto b : bytes)
            if (b != 0) return false;
        return true;
    }

    static Hash256 zero() { return Hash256{}; }

    uint64_t truncated_u64() const {
        uint64_t v = 0;
        std::memcpy(&v, bytes.data(), 8);
        return v;  // little-endian host assumed (x86_64)
    }
};

struct Hash256Hasher {
    size_t operator()(const Hash256& h) const { return static_cast<size_t>(h.truncated_u64()); }
};

std::string to_hex(std::span<const uint8_t> data);
std::optional<Bytes> from_hex(std::string_view hex);

inline std::string to_hex(const Hash256& h) { return to_hex(std::span<const uint8_t>(h.bytes)); }

/// Append-only little-endian byte assembler for the canonical wire layouts.
class ByteWriter {
  public:
    void u8(uint8_t v) { out_.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; i++) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; i++) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void i128(__int128 v) {
        auto u = static_cast<unsigned __int128>(v);  // two's complement
        for (int i = 0; i < 16; i++) out_.push_back(static_cast<uint8_t>(u >> (8 * i)));
    }
    void raw(std::span<const uint8_t> data) { out_.insert(out_.end(), data.begin(), data.end()); }
    void hash(const Hash256& h) { raw(h.bytes); }

    const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

  private:
    Bytes out_;
};

/// Cursor-based reader; every accessor fails soft so decoders can reject
/// truncated or trailing input uniformly.
class ByteReader {
  public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    std::optional<uint8_t> u8() {
        if (pos_ + 1 > data_.size()) return std::nullopt;
        return data_[pos_++];
    }
    std::optional<uint32_t> u32() {
        if (pos_ + 4 > data_.size()) return std::nullopt;
        uint32_t v = 0;
        for (int i = 0; i < 4; i++) v |= static_cast<uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    std::optional<uint64_t> u64() {
        if (pos_ + 8 > data_.size()) return std::nullopt;
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }
    std::optional<__int128> i128() {
        if (pos_ + 16 > data_.size()) return std::nullopt;
        unsigned __int128 v = 0;
        for (int i = 0; i < 16; i++) v |= static_cast<unsigned __int128>(data_[pos_ + i]) << (8 * i);
        pos_ += 16;
        return static_cast<__int128>(v);
    }
    std::optional<Hash256> hash() {
        if (pos_ + 32 > data_.size()) return std::nullopt;
        Hash256 h;
        std::memcpy(h.bytes.data(), data_.data() + pos_, 32);
        pos_ += 32;
        return h;
    }
    bool raw(std::span<uint8_t> dst) {
        if (pos_ + dst.size() > data_.size()) return false;
        std::memcpy(dst.data(), data_.data() + pos_, dst.size());
        pos_ += dst.size();
        return true;
    }

    size_t remaining() const { return data_.size() - pos_; }
    bool exhausted() const { return pos_ == data_.size(); }

  private:
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

std::string i128_to_string(__int128 v);

}  // namespace superlight
