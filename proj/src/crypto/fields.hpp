#pragma once

// BLS12-381 field tower: Fp, Fp2 = Fp[u]/(u^2+1), Fp6 = Fp2[v]/(v^3 - xi),
// Fp12 = Fp6[w]/(w^2 - v), with xi = u + 1. Fp elements are kept in
// Montgomery form (R = 2^384). Exponent bit strings that depend on p are
// derived once at startup with GMP rather than transcribed.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace superlight::crypto {

struct Fp {
    // little-endian 64-bit limbs, Montgomery form
    std::array<uint64_t, 6> v{};

    static const Fp& zero();
    static const Fp& one();
    static Fp from_u64(uint64_t x);

    Fp add(const Fp& o) const;
    Fp sub(const Fp& o) const;
    Fp dbl() const { return add(*this); }
    Fp mul(const Fp& o) const;
    Fp sqr() const { return mul(*this); }
    Fp neg() const;
    Fp inverse() const;  // zero maps to zero
    bool is_zero() const;
    bool operator==(const Fp& o) const { return v == o.v; }

    Fp pow(std::span<const uint8_t> exp_be) const;

    /// Interprets 48 big-endian bytes; rejects values >= p.
    static std::optional<Fp> from_bytes_be(std::span<const uint8_t> in);
    std::array<uint8_t, 48> to_bytes_be() const;

    /// Reduces an arbitrary-width big-endian integer mod p.
    static Fp from_wide_be(std::span<const uint8_t> in);

    /// True if the canonical integer form is > (p-1)/2.
    bool is_lexicographically_largest() const;
};

struct Fp2 {
    Fp c0, c1;  // c0 + c1*u

    static Fp2 zero() { return {}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }

    Fp2 add(const Fp2& o) const { return {c0.add(o.c0), c1.add(o.c1)}; }
    Fp2 sub(const Fp2& o) const { return {c0.sub(o.c0), c1.sub(o.c1)}; }
    Fp2 dbl() const { return add(*this); }
    Fp2 mul(const Fp2& o) const;
    Fp2 sqr() const;
    Fp2 neg() const { return {c0.neg(), c1.neg()}; }
    Fp2 conjugate() const { return {c0, c1.neg()}; }
    Fp2 mul_fp(const Fp& s) const { return {c0.mul(s), c1.mul(s)}; }
    Fp2 inverse() const;
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }

    Fp2 pow(std::span<const uint8_t> exp_be) const;
    std::optional<Fp2> sqrt() const;

    /// Multiplication by xi = u + 1.
    Fp2 mul_by_xi() const { return {c0.sub(c1), c0.add(c1)}; }

    /// Sign convention for compression: compare c1 first, then c0.
    bool is_lexicographically_largest() const;
};

struct Fp6 {
    Fp2 c0, c1, c2;  // c0 + c1*v + c2*v^2

    static Fp6 zero() { return {}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    Fp6 add(const Fp6& o) const { return {c0.add(o.c0), c1.add(o.c1), c2.add(o.c2)}; }
    Fp6 sub(const Fp6& o) const { return {c0.sub(o.c0), c1.sub(o.c1), c2.sub(o.c2)}; }
    Fp6 mul(const Fp6& o) const;
    Fp6 sqr() const { return mul(*this); }
    Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }
    Fp6 inverse() const;
    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const = default;

    /// Multiplication by v: (c0,c1,c2) -> (xi*c2, c0, c1).
    Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }
};

struct Fp12 {
    Fp6 c0, c1;  // c0 + c1*w

    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    Fp12 mul(const Fp12& o) const;
    Fp12 sqr() const;
    Fp12 conjugate() const { return {c0, c1.neg()}; }  // = Frobenius^6
    Fp12 inverse() const;
    Fp12 frobenius() const;
    bool operator==(const Fp12& o) const = default;
    bool is_one() const { return *this == one(); }
};

// Startup-derived exponents and Frobenius coefficients.
struct FieldContext {
    std::vector<uint8_t> fp_sqrt_exp;       // (p+1)/4, big-endian
    std::vector<uint8_t> fp_inv_exp;        // p-2 (Fermat inverse oracle)
    std::vector<uint8_t> fp2_sqrt_exp1;     // (p-3)/4
    std::vector<uint8_t> fp2_sqrt_exp2;     // (p-1)/2
    std::vector<int8_t> final_exp_naf;      // NAF of (p^4 - p^2 + 1)/r, most significant first
    Fp2 frob6_c1;                           // xi^((p-1)/3)
    Fp2 frob6_c2;                           // xi^(2(p-1)/3)
    Fp2 frob12_w;                           // xi^((p-1)/6)

    static const FieldContext& get();
};

/// r, the group order, as 32 big-endian bytes.
std::span<const uint8_t, 32> fr_order_be();

/// Reduces a big-endian integer mod r; returns 32 big-endian bytes.
std::array<uint8_t, 32> fr_reduce_wide_be(std::span<const uint8_t> in);

/// True iff 32 big-endian bytes encode an integer in [1, r).
bool fr_is_canonical_nonzero(std::span<const uint8_t, 32> in);

}  // namespace superlight::crypto
