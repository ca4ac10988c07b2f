#pragma once

#include <span>

#include "superlight/bytes.hpp"

namespace superlight {

// One-byte domain tags. Every hash-derived value is separated by one of
// these so digests from different contexts can never collide structurally.
// The full layout catalogue lives in docs/wire.md.
namespace tag {
inline constexpr uint8_t kMerkleNode = 0x01;   // internal merkle node combine
inline constexpr uint8_t kBucketLeaf = 0x02;   // bucket leaf digest
inline constexpr uint8_t kTx = 0x03;           // transaction id
inline constexpr uint8_t kBloomH1 = 0x04;      // bloom double-hash digest 1
inline constexpr uint8_t kBloomH2 = 0x05;      // bloom double-hash digest 2
inline constexpr uint8_t kExperimentAddr = 0x06;  // growth-experiment address stream
inline constexpr uint8_t kKeygen = 0x07;       // secret scalar derivation
inline constexpr uint8_t kHashToField = 0x08;  // hash-to-curve field candidates
inline constexpr uint8_t kSigTx = 0x10;        // signed message: tx endorsement
inline constexpr uint8_t kSigRoot = 0x11;      // signed message: merkle-mode top root
inline constexpr uint8_t kSigEmpty = 0x12;     // signed message: proposer empty-block attest
}  // namespace tag

/// SHA-256 of the input. The fixed 256-bit hash used everywhere: tx ids,
/// merkle nodes, header hashes, bloom index derivation.
Hash256 hash256(std::span<const uint8_t> data);

/// hash256 over tag byte followed by the payload.
Hash256 hash256_tagged(uint8_t tag, std::span<const uint8_t> data);

}  // namespace superlight
