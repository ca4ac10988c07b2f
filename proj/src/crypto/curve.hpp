#pragma once

// BLS12-381 group arithmetic. G1 lives on y^2 = x^3 + 4 over Fp, G2 on the
// twist y^2 = x^3 + 4(u+1) over Fp2. Points are affine values; scalar
// multiplication goes through Jacobian coordinates internally. Compressed
// serialization follows the common 3-flag-bit layout (compression bit,
// infinity bit, y-sign bit packed into the top of the first byte).

#include <optional>

#include "fields.hpp"

namespace superlight::crypto {

template <typename F>
struct AffinePoint {
    F x{};
    F y{};
    bool infinity = true;

    bool operator==(const AffinePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    AffinePoint negated() const {
        if (infinity) return *this;
        return {x, y.neg(), false};
    }
};

using G1Affine = AffinePoint<Fp>;
using G2Affine = AffinePoint<Fp2>;

const G1Affine& g1_generator();
const G2Affine& g2_generator();
const G2Affine& g2_generator_neg();

G1Affine g1_add(const G1Affine& a, const G1Affine& b);
G2Affine g2_add(const G2Affine& a, const G2Affine& b);

/// Double-and-add over a big-endian scalar; not constant time (simulation
/// tool, not a wallet).
G1Affine g1_mul(const G1Affine& p, std::span<const uint8_t> scalar_be);
G2Affine g2_mul(const G2Affine& p, std::span<const uint8_t> scalar_be);

bool g1_on_curve(const G1Affine& p);
bool g2_on_curve(const G2Affine& p);
bool g1_in_subgroup(const G1Affine& p);
bool g2_in_subgroup(const G2Affine& p);

std::array<uint8_t, 48> g1_compress(const G1Affine& p);
std::array<uint8_t, 96> g2_compress(const G2Affine& p);

/// Full canonical decode: flag validation, x < p, on-curve, subgroup.
/// Infinity decodes only as the canonical infinity encoding.
std::optional<G1Affine> g1_decompress(std::span<const uint8_t> in);
std::optional<G2Affine> g2_decompress(std::span<const uint8_t> in);

/// Deterministic try-and-increment hash to a G1 subgroup point.
/// Never returns infinity for non-pathological inputs.
G1Affine hash_to_g1(std::span<const uint8_t> msg);

}  // namespace superlight::crypto
