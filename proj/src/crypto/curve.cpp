#include "curve.hpp"

#include <cstring>
#include <stdexcept>

#include "superlight/hash.hpp"

namespace superlight::crypto {

namespace {

// generic-curve helpers shared by G1 and G2 (a = 0 short Weierstrass)

template <typename F>
struct CurveOps {
    static F b();  // curve constant
};

template <>
struct CurveOps<Fp> {
    static Fp b() { return Fp::from_u64(4); }
};

template <>
struct CurveOps<Fp2> {
    static Fp2 b() { return Fp2{Fp::from_u64(4), Fp::from_u64(4)}; }
};

template <typename F>
struct Jacobian {
    F x{}, y{}, z{};  // z == 0 encodes infinity

    static Jacobian from_affine(const AffinePoint<F>& p) {
        if (p.infinity) return {};
        Jacobian j;
        j.x = p.x;
        j.y = p.y;
        j.z = one();
        return j;
    }

    static F one() {
        if constexpr (std::is_same_v<F, Fp>)
            return Fp::one();
        else
            return F::one();
    }

    bool is_infinity() const { return z.is_zero(); }

    AffinePoint<F> to_affine() const {
        if (is_infinity()) return {};
        F zinv = z.inverse();
        F zinv2 = zinv.sqr();
        return {x.mul(zinv2), y.mul(zinv2.mul(zinv)), false};
    }

    Jacobian dbl() const {
        if (is_infinity()) return *this;
        // a = 0 doubling
        F a = x.sqr();
        F b = y.sqr();
        F c = b.sqr();
        F d = x.add(b).sqr().sub(a).sub(c);
        d = d.add(d);
        F e = a.add(a).add(a);
        F f = e.sqr();
        Jacobian out;
        out.x = f.sub(d).sub(d);
        F c8 = c.add(c);
        c8 = c8.add(c8);
        c8 = c8.add(c8);
        out.y = e.mul(d.sub(out.x)).sub(c8);
        out.z = y.mul(z);
        out.z = out.z.add(out.z);
        return out;
    }

    Jacobian add(const Jacobian& o) const {
        if (is_infinity()) return o;
        if (o.is_infinity()) return *this;
        F z1z1 = z.sqr();
        F z2z2 = o.z.sqr();
        F u1 = x.mul(z2z2);
        F u2 = o.x.mul(z1z1);
        F s1 = y.mul(z2z2).mul(o.z);
        F s2 = o.y.mul(z1z1).mul(z);
        if (u1 == u2) {
            if (s1 == s2) return dbl();
            return {};  // inverse points
        }
        F h = u2.sub(u1);
        F i = h.add(h).sqr();
        F j = h.mul(i);
        F r = s2.sub(s1);
        r = r.add(r);
        F v = u1.mul(i);
        Jacobian out;
        out.x = r.sqr().sub(j).sub(v.add(v));
        F s1j = s1.mul(j);
        out.y = r.mul(v.sub(out.x)).sub(s1j.add(s1j));
        out.z = z.add(o.z).sqr().sub(z1z1).sub(z2z2).mul(h);
        return out;
    }
};

template <typename F>
AffinePoint<F> affine_add(const AffinePoint<F>& a, const AffinePoint<F>& b) {
    return Jacobian<F>::from_affine(a).add(Jacobian<F>::from_affine(b)).to_affine();
}

template <typename F>
AffinePoint<F> affine_mul(const AffinePoint<F>& p, std::span<const uint8_t> scalar_be) {
    Jacobian<F> acc{};
    Jacobian<F> base = Jacobian<F>::from_affine(p);
    bool started = false;
    for (uint8_t byte : scalar_be) {
        for (int bit = 7; bit >= 0; bit--) {
            if (started) acc = acc.dbl();
            if ((byte >> bit) & 1) {
                acc = acc.add(base);
                started = true;
            }
        }
    }
    return acc.to_affine();
}

template <typename F>
bool on_curve(const AffinePoint<F>& p) {
    if (p.infinity) return true;
    return p.y.sqr() == p.x.sqr().mul(p.x).add(CurveOps<F>::b());
}

// G1 cofactor (z-1)^2 / 3
constexpr uint8_t kG1CofactorBe[] = {0x39, 0x6c, 0x8c, 0x00, 0x55, 0x55, 0xe1, 0x56,
                                     0x8c, 0x00, 0xaa, 0xab, 0x00, 0x00, 0xaa, 0xab};

struct GeneratorHex {
    const char* g1x;
    const char* g1y;
    const char* g2x0;
    const char* g2x1;
    const char* g2y0;
    const char* g2y1;
};

constexpr GeneratorHex kGen = {
    "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb",
    "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa232946c5e7e1",
    "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8",
    "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e",
    "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e193548608b82801",
    "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be",
};

Fp fp_from_hex(const char* hex) {
    auto bytes = from_hex(hex);
    if (!bytes || bytes->size() != 48) throw std::logic_error("bad field constant");
    auto f = Fp::from_bytes_be(*bytes);
    if (!f) throw std::logic_error("field constant not canonical");
    return *f;
}

}  // namespace

const G1Affine& g1_generator() {
    static const G1Affine g = [] {
        G1Affine p{fp_from_hex(kGen.g1x), fp_from_hex(kGen.g1y), false};
        if (!g1_on_curve(p)) throw std::logic_error("g1 generator off curve");
        return p;
    }();
    return g;
}

const G2Affine& g2_generator() {
    static const G2Affine g = [] {
        G2Affine p{Fp2{fp_from_hex(kGen.g2x0), fp_from_hex(kGen.g2x1)},
                   Fp2{fp_from_hex(kGen.g2y0), fp_from_hex(kGen.g2y1)}, false};
        if (!g2_on_curve(p)) throw std::logic_error("g2 generator off curve");
        return p;
    }();
    return g;
}

const G2Affine& g2_generator_neg() {
    static const G2Affine g = g2_generator().negated();
    return g;
}

G1Affine g1_add(const G1Affine& a, const G1Affine& b) { return affine_add(a, b); }
G2Affine g2_add(const G2Affine& a, const G2Affine& b) { return affine_add(a, b); }

G1Affine g1_mul(const G1Affine& p, std::span<const uint8_t> scalar_be) {
    return affine_mul(p, scalar_be);
}
G2Affine g2_mul(const G2Affine& p, std::span<const uint8_t> scalar_be) {
    return affine_mul(p, scalar_be);
}

bool g1_on_curve(const G1Affine& p) { return on_curve(p); }
bool g2_on_curve(const G2Affine& p) { return on_curve(p); }

bool g1_in_subgroup(const G1Affine& p) { return g1_mul(p, fr_order_be()).infinity; }
bool g2_in_subgroup(const G2Affine& p) { return g2_mul(p, fr_order_be()).infinity; }

// flag bits in the first serialized byte
constexpr uint8_t kFlagCompressed = 0x80;
constexpr uint8_t kFlagInfinity = 0x40;
constexpr uint8_t kFlagYLargest = 0x20;

std::array<uint8_t, 48> g1_compress(const G1Affine& p) {
    std::array<uint8_t, 48> out{};
    if (p.infinity) {
        out[0] = kFlagCompressed | kFlagInfinity;
        return out;
    }
    out = p.x.to_bytes_be();
    out[0] |= kFlagCompressed;
    if (p.y.is_lexicographically_largest()) out[0] |= kFlagYLargest;
    return out;
}

std::array<uint8_t, 96> g2_compress(const G2Affine& p) {
    std::array<uint8_t, 96> out{};
    if (p.infinity) {
        out[0] = kFlagCompressed | kFlagInfinity;
        return out;
    }
    auto c1 = p.x.c1.to_bytes_be();  // c1 serialized first
    auto c0 = p.x.c0.to_bytes_be();
    std::memcpy(out.data(), c1.data(), 48);
    std::memcpy(out.data() + 48, c0.data(), 48);
    out[0] |= kFlagCompressed;
    if (p.y.is_lexicographically_largest()) out[0] |= kFlagYLargest;
    return out;
}

namespace {

// strips flags, returns (flags, cleared first byte) after structural checks
std::optional<uint8_t> check_flags(std::span<const uint8_t> in) {
    uint8_t flags = in[0] & 0xe0;
    if (!(flags & kFlagCompressed)) return std::nullopt;  // only compressed accepted
    if ((flags & kFlagInfinity) && (flags & kFlagYLargest)) return std::nullopt;
    return flags;
}

bool all_zero_after_flags(std::span<const uint8_t> in) {
    if ((in[0] & 0x1f) != 0) return false;
    for (size_t i = 1; i < in.size(); i++)
        if (in[i] != 0) return false;
    return true;
}

}  // namespace

std::optional<G1Affine> g1_decompress(std::span<const uint8_t> in) {
    if (in.size() != 48) return std::nullopt;
    auto flags = check_flags(in);
    if (!flags) return std::nullopt;
    if (*flags & kFlagInfinity) {
        if (!all_zero_after_flags(in)) return std::nullopt;
        return G1Affine{};
    }
    std::array<uint8_t, 48> buf;
    std::memcpy(buf.data(), in.data(), 48);
    buf[0] &= 0x1f;
    auto x = Fp::from_bytes_be(buf);
    if (!x) return std::nullopt;
    Fp rhs = x->sqr().mul(*x).add(Fp::from_u64(4));
    Fp y = rhs.pow(FieldContext::get().fp_sqrt_exp);
    if (!(y.sqr() == rhs)) return std::nullopt;  // x not on curve
    bool want_largest = (*flags & kFlagYLargest) != 0;
    if (y.is_lexicographically_largest() != want_largest) y = y.neg();
    G1Affine p{*x, y, false};
    if (!g1_in_subgroup(p)) return std::nullopt;
    return p;
}

std::optional<G2Affine> g2_decompress(std::span<const uint8_t> in) {
    if (in.size() != 96) return std::nullopt;
    auto flags = check_flags(in);
    if (!flags) return std::nullopt;
    if (*flags & kFlagInfinity) {
        if (!all_zero_after_flags(in)) return std::nullopt;
        return G2Affine{};
    }
    std::array<uint8_t, 48> buf;
    std::memcpy(buf.data(), in.data(), 48);
    buf[0] &= 0x1f;
    auto xc1 = Fp::from_bytes_be(buf);
    auto xc0 = Fp::from_bytes_be(in.subspan(48, 48));
    if (!xc0 || !xc1) return std::nullopt;
    Fp2 x{*xc0, *xc1};
    Fp2 rhs = x.sqr().mul(x).add(Fp2{Fp::from_u64(4), Fp::from_u64(4)});
    auto y = rhs.sqrt();
    if (!y) return std::nullopt;
    bool want_largest = (*flags & kFlagYLargest) != 0;
    Fp2 yy = *y;
    if (yy.is_lexicographically_largest() != want_largest) yy = yy.neg();
    G2Affine p{x, yy, false};
    if (!g2_in_subgroup(p)) return std::nullopt;
    return p;
}

G1Affine hash_to_g1(std::span<const uint8_t> msg) {
    for (int ctr = 0; ctr < 256; ctr++) {
        Bytes material;
        material.reserve(msg.size() + 2);
        material.insert(material.end(), msg.begin(), msg.end());
        material.push_back(static_cast<uint8_t>(ctr));
        material.push_back(0x00);
        Hash256 d0 = hash256_tagged(tag::kHashToField, material);
        material.back() = 0x01;
        Hash256 d1 = hash256_tagged(tag::kHashToField, material);

        std::array<uint8_t, 64> wide;
        std::memcpy(wide.data(), d0.bytes.data(), 32);
        std::memcpy(wide.data() + 32, d1.bytes.data(), 32);
        Fp x = Fp::from_wide_be(wide);

        Fp rhs = x.sqr().mul(x).add(Fp::from_u64(4));
        Fp y = rhs.pow(FieldContext::get().fp_sqrt_exp);
        if (!(y.sqr() == rhs)) continue;
        if (y.is_lexicographically_largest()) y = y.neg();  // deterministic choice

        G1Affine p = g1_mul(G1Affine{x, y, false}, kG1CofactorBe);
        if (!p.infinity) return p;
    }
    throw std::runtime_error("hash_to_g1: no curve point found in 256 tries");
}

}  // namespace superlight::crypto
