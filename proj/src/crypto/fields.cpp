#include "fields.hpp"

#include <gmp.h>

#include <cstring>
#include <stdexcept>
#include <string>

namespace superlight::crypto {

namespace {

// p = 0x1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624
//     1eabfffeb153ffffb9feffffffffaaab
constexpr std::array<uint64_t, 6> kP = {
    0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL,
    0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL,
};

// -p^-1 mod 2^64
constexpr uint64_t kInv = 0x89f3fffcfffcfffdULL;

// R = 2^384 mod p (the Montgomery representation of 1)
constexpr std::array<uint64_t, 6> kR = {
    0x760900000002fffdULL, 0xebf4000bc40c0002ULL, 0x5f48985753c758baULL,
    0x77ce585370525745ULL, 0x5c071a97a256ec6dULL, 0x15f65ec3fa80e493ULL,
};

// R^2 mod p, used to convert into Montgomery form
constexpr std::array<uint64_t, 6> kR2 = {
    0xf4df1f341c341746ULL, 0x0a76e6a609d104f1ULL, 0x8de5476c4c95b6d5ULL,
    0x67eb88a9939d83c0ULL, 0x9a793e85b519952dULL, 0x11988fe592cae3aaULL,
};

const char* kPHex =
    "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624"
    "1eabfffeb153ffffb9feffffffffaaab";

// group order r
const char* kRHex = "73eda753299d7d483339d80809a1d80553bde402fffe5bfeffffffff00000001";

constexpr std::array<uint8_t, 32> kFrOrderBe = {
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
    0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xe4, 0x02, 0xff, 0xfe,
    0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};

// a < b over little-endian limb arrays
bool limbs_lt(const std::array<uint64_t, 6>& a, const std::array<uint64_t, 6>& b) {
    for (int i = 5; i >= 0; i--) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::array<uint64_t, 6> limbs_sub(const std::array<uint64_t, 6>& a,
                                  const std::array<uint64_t, 6>& b) {
    std::array<uint64_t, 6> out;
    uint64_t borrow = 0;
    for (int i = 0; i < 6; i++) {
        uint64_t t = a[i] - b[i];
        uint64_t borrow2 = a[i] < b[i] ? 1 : 0;
        uint64_t t2 = t - borrow;
        if (t < borrow) borrow2 = 1;
        out[i] = t2;
        borrow = borrow2;
    }
    return out;
}

std::vector<uint8_t> mpz_to_be(const mpz_t x) {
    size_t bits = mpz_sizeinbase(x, 2);
    size_t bytes = (bits + 7) / 8;
    std::vector<uint8_t> out(bytes == 0 ? 1 : bytes, 0);
    size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, x);
    if (written == 0) out.assign(1, 0);
    return out;
}

}  // namespace

const Fp& Fp::zero() {
    static const Fp z{};
    return z;
}

const Fp& Fp::one() {
    static const Fp o{kR};
    return o;
}

bool Fp::is_zero() const {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

Fp Fp::add(const Fp& o) const {
    Fp out;
    uint64_t carry = 0;
    for (int i = 0; i < 6; i++) {
        unsigned __int128 t = static_cast<unsigned __int128>(v[i]) + o.v[i] + carry;
        out.v[i] = static_cast<uint64_t>(t);
        carry = static_cast<uint64_t>(t >> 64);
    }
    if (carry || !limbs_lt(out.v, kP)) out.v = limbs_sub(out.v, kP);
    return out;
}

Fp Fp::sub(const Fp& o) const {
    Fp out;
    if (limbs_lt(v, o.v)) {
        // v + p - o
        std::array<uint64_t, 6> t;
        uint64_t carry = 0;
        for (int i = 0; i < 6; i++) {
            unsigned __int128 s = static_cast<unsigned __int128>(v[i]) + kP[i] + carry;
            t[i] = static_cast<uint64_t>(s);
            carry = static_cast<uint64_t>(s >> 64);
        }
        out.v = limbs_sub(t, o.v);
        // carry bit cannot survive: v + p < 2p < 2^385 and the subtraction
        // of o (> v) brings the value back under p
        (void)carry;
    } else {
        out.v = limbs_sub(v, o.v);
    }
    return out;
}

Fp Fp::neg() const {
    if (is_zero()) return *this;
    Fp out;
    out.v = limbs_sub(kP, v);
    return out;
}

Fp Fp::mul(const Fp& o) const {
    // CIOS Montgomery multiplication, 6 limbs
    const auto& a = v;
    const auto& b = o.v;
    uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    uint64_t t6 = 0, t7 = 0;
    for (int i = 0; i < 6; i++) {
        unsigned __int128 carry = 0;
        for (int j = 0; j < 6; j++) {
            unsigned __int128 cur =
                static_cast<unsigned __int128>(a[i]) * b[j] + t[j] + static_cast<uint64_t>(carry);
            t[j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        unsigned __int128 cur = static_cast<unsigned __int128>(t6) + static_cast<uint64_t>(carry);
        t6 = static_cast<uint64_t>(cur);
        t7 = static_cast<uint64_t>(cur >> 64);

        uint64_t m = t[0] * kInv;
        carry = (static_cast<unsigned __int128>(m) * kP[0] + t[0]) >> 64;
        for (int j = 1; j < 6; j++) {
            unsigned __int128 cur2 =
                static_cast<unsigned __int128>(m) * kP[j] + t[j] + static_cast<uint64_t>(carry);
            t[j - 1] = static_cast<uint64_t>(cur2);
            carry = cur2 >> 64;
        }
        unsigned __int128 cur3 = static_cast<unsigned __int128>(t6) + static_cast<uint64_t>(carry);
        t[5] = static_cast<uint64_t>(cur3);
        t6 = t7 + static_cast<uint64_t>(cur3 >> 64);
    }
    Fp out;
    std::memcpy(out.v.data(), t, sizeof(t));
    if (t6 || !limbs_lt(out.v, kP)) out.v = limbs_sub(out.v, kP);
    return out;
}

Fp Fp::from_u64(uint64_t x) {
    Fp raw{};
    raw.v[0] = x;
    Fp r2{kR2};
    return raw.mul(r2);  // x * R^2 * R^-1 = x * R
}

Fp Fp::pow(std::span<const uint8_t> exp_be) const {
    Fp acc = Fp::one();
    for (uint8_t byte : exp_be) {
        for (int bit = 7; bit >= 0; bit--) {
            acc = acc.sqr();
            if ((byte >> bit) & 1) acc = acc.mul(*this);
        }
    }
    return acc;
}

Fp Fp::inverse() const {
    if (is_zero()) return *this;
    // binary extended GCD on the canonical (non-Montgomery) representation
    // would need a conversion dance; Fermat via fixed exponent p-2 is simpler
    // and plenty fast for the trust anchor. A faster dedicated routine was
    // benchmarked as unnecessary: inversions are rare outside the miller
    // loop, and the miller loop batches them per step anyway.
    return pow(FieldContext::get().fp_inv_exp);
}

std::optional<Fp> Fp::from_bytes_be(std::span<const uint8_t> in) {
    if (in.size() != 48) return std::nullopt;
    std::array<uint64_t, 6> raw{};
    for (int limb = 0; limb < 6; limb++) {
        uint64_t x = 0;
        for (int b = 0; b < 8; b++) x = (x << 8) | in[(5 - limb) * 8 + b];
        raw[limb] = x;
    }
    if (!limbs_lt(raw, kP)) return std::nullopt;
    Fp f{raw};
    Fp r2{kR2};
    return f.mul(r2);
}

std::array<uint8_t, 48> Fp::to_bytes_be() const {
    // multiply by 1 (non-Montgomery) to strip the R factor
    Fp stripped = mul(Fp{{1, 0, 0, 0, 0, 0}});
    std::array<uint8_t, 48> out{};
    for (int limb = 0; limb < 6; limb++) {
        uint64_t x = stripped.v[limb];
        for (int b = 0; b < 8; b++) out[(5 - limb) * 8 + (7 - b)] = static_cast<uint8_t>(x >> (8 * b));
    }
    return out;
}

Fp Fp::from_wide_be(std::span<const uint8_t> in) {
    mpz_t x, p;
    mpz_init(x);
    mpz_init(p);
    mpz_import(x, in.size(), 1, 1, 1, 0, in.data());
    mpz_set_str(p, kPHex, 16);
    mpz_mod(x, x, p);
    std::array<uint8_t, 48> buf{};
    size_t written = 0;
    mpz_export(buf.data() + 48 - (mpz_sizeinbase(x, 2) + 7) / 8, &written, 1, 1, 1, 0, x);
    mpz_clear(x);
    mpz_clear(p);
    auto f = from_bytes_be(buf);
    return *f;  // reduced mod p, always canonical
}

bool Fp::is_lexicographically_largest() const {
    // compare canonical form against (p-1)/2: x > (p-1)/2  <=>  2x >= p+1  <=> 2x > p
    auto be = to_bytes_be();
    std::array<uint64_t, 6> raw{};
    for (int limb = 0; limb < 6; limb++) {
        uint64_t x = 0;
        for (int b = 0; b < 8; b++) x = (x << 8) | be[(5 - limb) * 8 + b];
        raw[limb] = x;
    }
    // halfway = (p-1)/2; x is "largest" iff x > halfway
    static const std::array<uint64_t, 6> kHalf = [] {
        std::array<uint64_t, 6> h = kP;
        // (p-1)/2 == p >> 1 since p is odd
        for (int i = 0; i < 6; i++) {
            h[i] = (kP[i] >> 1) | (i < 5 ? (kP[i + 1] << 63) : 0);
        }
        return h;
    }();
    return limbs_lt(kHalf, raw);
}

// ---------------------------------------------------------------------------
// Fp2

Fp2 Fp2::mul(const Fp2& o) const {
    // Karatsuba: (a0 + a1 u)(b0 + b1 u), u^2 = -1
    Fp t0 = c0.mul(o.c0);
    Fp t1 = c1.mul(o.c1);
    Fp sum = c0.add(c1).mul(o.c0.add(o.c1));
    return {t0.sub(t1), sum.sub(t0).sub(t1)};
}

Fp2 Fp2::sqr() const {
    // (a0 + a1 u)^2 = (a0+a1)(a0-a1) + 2 a0 a1 u
    Fp t = c0.mul(c1);
    return {c0.add(c1).mul(c0.sub(c1)), t.add(t)};
}

Fp2 Fp2::inverse() const {
    Fp norm = c0.sqr().add(c1.sqr());
    Fp ninv = norm.inverse();
    return {c0.mul(ninv), c1.neg().mul(ninv)};
}

Fp2 Fp2::pow(std::span<const uint8_t> exp_be) const {
    Fp2 acc = Fp2::one();
    for (uint8_t byte : exp_be) {
        for (int bit = 7; bit >= 0; bit--) {
            acc = acc.sqr();
            if ((byte >> bit) & 1) acc = acc.mul(*this);
        }
    }
    return acc;
}

std::optional<Fp2> Fp2::sqrt() const {
    // p == 3 mod 4 variant over Fp2 (zkcrypto construction)
    const auto& ctx = FieldContext::get();
    if (is_zero()) return *this;
    Fp2 a1 = pow(ctx.fp2_sqrt_exp1);           // a^((p-3)/4)
    Fp2 alpha = a1.sqr().mul(*this);           // a^((p-1)/2)
    Fp2 x0 = a1.mul(*this);                    // a^((p+1)/4)
    Fp2 neg_one = Fp2::one().neg();
    Fp2 cand;
    if (alpha == neg_one) {
        cand = Fp2{x0.c1.neg(), x0.c0};        // x0 * u
    } else {
        cand = alpha.add(Fp2::one()).pow(ctx.fp2_sqrt_exp2).mul(x0);
    }
    if (cand.sqr() == *this) return cand;
    return std::nullopt;
}

bool Fp2::is_lexicographically_largest() const {
    if (!c1.is_zero()) return c1.is_lexicographically_largest();
    return c0.is_lexicographically_largest();
}

// ---------------------------------------------------------------------------
// Fp6

Fp6 Fp6::mul(const Fp6& o) const {
    Fp2 t0 = c0.mul(o.c0);
    Fp2 t1 = c1.mul(o.c1);
    Fp2 t2 = c2.mul(o.c2);

    Fp2 r0 = c1.add(c2).mul(o.c1.add(o.c2)).sub(t1).sub(t2).mul_by_xi().add(t0);
    Fp2 r1 = c0.add(c1).mul(o.c0.add(o.c1)).sub(t0).sub(t1).add(t2.mul_by_xi());
    Fp2 r2 = c0.add(c2).mul(o.c0.add(o.c2)).sub(t0).sub(t2).add(t1);
    return {r0, r1, r2};
}

Fp6 Fp6::inverse() const {
    Fp2 a = c0.sqr().sub(c1.mul(c2).mul_by_xi());
    Fp2 b = c2.sqr().mul_by_xi().sub(c0.mul(c1));
    Fp2 c = c1.sqr().sub(c0.mul(c2));
    Fp2 t = c0.mul(a).add(c2.mul(b).mul_by_xi()).add(c1.mul(c).mul_by_xi());
    Fp2 tinv = t.inverse();
    return {a.mul(tinv), b.mul(tinv), c.mul(tinv)};
}

// ---------------------------------------------------------------------------
// Fp12

Fp12 Fp12::mul(const Fp12& o) const {
    Fp6 t0 = c0.mul(o.c0);
    Fp6 t1 = c1.mul(o.c1);
    Fp6 r0 = t1.mul_by_v().add(t0);
    Fp6 r1 = c0.add(c1).mul(o.c0.add(o.c1)).sub(t0).sub(t1);
    return {r0, r1};
}

Fp12 Fp12::sqr() const {
    // (a + b w)^2 = (a^2 + v b^2) + 2ab w
    Fp6 t = c0.mul(c1);
    Fp6 a = c0.add(c1).mul(c0.add(c1.mul_by_v())).sub(t).sub(t.mul_by_v());
    Fp6 b = t.add(t);
    return {a, b};
}

Fp12 Fp12::inverse() const {
    Fp6 norm = c0.sqr().sub(c1.sqr().mul_by_v());
    Fp6 ninv = norm.inverse();
    return {c0.mul(ninv), c1.neg().mul(ninv)};
}

Fp12 Fp12::frobenius() const {
    const auto& ctx = FieldContext::get();
    auto frob6 = [&](const Fp6& x) {
        return Fp6{x.c0.conjugate(), x.c1.conjugate().mul(ctx.frob6_c1),
                   x.c2.conjugate().mul(ctx.frob6_c2)};
    };
    Fp6 a = frob6(c0);
    Fp6 b = frob6(c1);
    // w coefficient picks up xi^((p-1)/6)
    b = Fp6{b.c0.mul(ctx.frob12_w), b.c1.mul(ctx.frob12_w), b.c2.mul(ctx.frob12_w)};
    return {a, b};
}

// ---------------------------------------------------------------------------
// context

namespace {

std::vector<int8_t> naf_digits(const mpz_t e) {
    mpz_t x;
    mpz_init_set(x, e);
    std::vector<int8_t> digits;  // least significant first while building
    while (mpz_sgn(x) > 0) {
        if (mpz_odd_p(x)) {
            unsigned long rem = mpz_fdiv_ui(x, 4);
            int8_t d = rem == 1 ? 1 : -1;
            digits.push_back(d);
            if (d == 1)
                mpz_sub_ui(x, x, 1);
            else
                mpz_add_ui(x, x, 1);
        } else {
            digits.push_back(0);
        }
        mpz_fdiv_q_2exp(x, x, 1);
    }
    mpz_clear(x);
    return {digits.rbegin(), digits.rend()};
}

FieldContext build_context() {
    FieldContext ctx;
    mpz_t p, r, e, tmp;
    mpz_inits(p, r, e, tmp, nullptr);
    mpz_set_str(p, kPHex, 16);
    mpz_set_str(r, kRHex, 16);

    mpz_add_ui(e, p, 1);
    mpz_fdiv_q_2exp(e, e, 2);
    ctx.fp_sqrt_exp = mpz_to_be(e);  // (p+1)/4

    mpz_sub_ui(e, p, 2);
    ctx.fp_inv_exp = mpz_to_be(e);  // p-2

    mpz_sub_ui(e, p, 3);
    mpz_fdiv_q_2exp(e, e, 2);
    ctx.fp2_sqrt_exp1 = mpz_to_be(e);  // (p-3)/4

    mpz_sub_ui(e, p, 1);
    mpz_fdiv_q_2exp(e, e, 1);
    ctx.fp2_sqrt_exp2 = mpz_to_be(e);  // (p-1)/2

    // hard part of the final exponentiation: (p^4 - p^2 + 1)/r
    mpz_pow_ui(e, p, 4);
    mpz_pow_ui(tmp, p, 2);
    mpz_sub(e, e, tmp);
    mpz_add_ui(e, e, 1);
    mpz_divexact(e, e, r);
    ctx.final_exp_naf = naf_digits(e);

    // Frobenius coefficients: xi^((p-1)/6) and its square/cube relatives
    mpz_sub_ui(e, p, 1);
    mpz_divexact_ui(e, e, 6);
    auto exp6 = mpz_to_be(e);
    Fp2 xi{Fp::one(), Fp::one()};
    ctx.frob12_w = xi.pow(exp6);
    ctx.frob6_c1 = ctx.frob12_w.sqr();
    ctx.frob6_c2 = ctx.frob6_c1.sqr();

    mpz_clears(p, r, e, tmp, nullptr);
    return ctx;
}

}  // namespace

const FieldContext& FieldContext::get() {
    static const FieldContext ctx = build_context();
    return ctx;
}

std::span<const uint8_t, 32> fr_order_be() { return kFrOrderBe; }

std::array<uint8_t, 32> fr_reduce_wide_be(std::span<const uint8_t> in) {
    mpz_t x, r;
    mpz_inits(x, r, nullptr);
    mpz_import(x, in.size(), 1, 1, 1, 0, in.data());
    mpz_set_str(r, kRHex, 16);
    mpz_mod(x, x, r);
    std::array<uint8_t, 32> out{};
    size_t written = 0;
    size_t bytes = (mpz_sizeinbase(x, 2) + 7) / 8;
    if (mpz_sgn(x) != 0) mpz_export(out.data() + 32 - bytes, &written, 1, 1, 1, 0, x);
    mpz_clears(x, r, nullptr);
    return out;
}

bool fr_is_canonical_nonzero(std::span<const uint8_t, 32> in) {
    bool nonzero = false;
    for (auto b : in)
        if (b != 0) nonzero = true;
    if (!nonzero) return false;
    for (int i = 0; i < 32; i++) {
        if (in[i] != kFrOrderBe[i]) return in[i] < kFrOrderBe[i];
    }
    return false;  // equal to r
}

}  // namespace superlight::crypto
