#include "pairing.hpp"

#include <stdexcept>

namespace superlight::crypto {

namespace {

// |z| for BLS12-381; z itself is negative, handled by a final conjugation.
constexpr uint64_t kAbsZ = 0xd201000000010000ULL;

void batch_invert(std::vector<Fp2>& xs) {
    if (xs.empty()) return;
    std::vector<Fp2> prefix(xs.size());
    Fp2 acc = Fp2::one();
    for (size_t i = 0; i < xs.size(); i++) {
        if (xs[i].is_zero()) throw std::logic_error("batch_invert: zero denominator");
        prefix[i] = acc;
        acc = acc.mul(xs[i]);
    }
    Fp2 inv = acc.inverse();
    for (size_t i = xs.size(); i-- > 0;) {
        Fp2 next = inv.mul(xs[i]);
        xs[i] = inv.mul(prefix[i]);
        inv = next;
    }
}

// Sparse line element: c0 slot of the first Fp6 plus the v*w and v^2*w slots.
struct Line {
    Fp2 a, b, c;

    Fp12 to_fp12() const {
        return Fp12{Fp6{a, Fp2::zero(), Fp2::zero()}, Fp6{Fp2::zero(), b, c}};
    }
};

// Line through T (doubling: tangent; addition: chord to Q), evaluated at the
// G1 point P, already scaled by xi so all slots stay integral:
//   a = yP * xi,  b = lambda*xT - yT,  c = -lambda*xP
Line eval_line(const Fp2& lambda, const G2Affine& t, const G1Affine& p) {
    Line l;
    l.a = Fp2{p.y, p.y};  // yP * (1 + u)
    l.b = lambda.mul(t.x).sub(t.y);
    l.c = lambda.mul_fp(p.x).neg();
    return l;
}

}  // namespace

Fp12 multi_miller_loop(const std::vector<std::pair<G1Affine, G2Affine>>& pairs) {
    std::vector<G1Affine> ps;
    std::vector<G2Affine> qs;
    for (const auto& [p, q] : pairs) {
        if (p.infinity || q.infinity) continue;
        ps.push_back(p);
        qs.push_back(q);
    }
    Fp12 f = Fp12::one();
    if (ps.empty()) return f;

    std::vector<G2Affine> ts = qs;
    std::vector<Fp2> denoms(ts.size());
    std::vector<Fp2> lambdas(ts.size());

    for (int bit = 62; bit >= 0; bit--) {
        f = f.sqr();
        // doubling step for every pair; denominators inverted as a batch
        for (size_t i = 0; i < ts.size(); i++) denoms[i] = ts[i].y.dbl();
        batch_invert(denoms);
        for (size_t i = 0; i < ts.size(); i++) {
            Fp2 x2 = ts[i].x.sqr();
            lambdas[i] = x2.add(x2).add(x2).mul(denoms[i]);  // 3x^2 / 2y
            f = f.mul(eval_line(lambdas[i], ts[i], ps[i]).to_fp12());
            Fp2 x3 = lambdas[i].sqr().sub(ts[i].x.dbl());
            Fp2 y3 = lambdas[i].mul(ts[i].x.sub(x3)).sub(ts[i].y);
            ts[i] = {x3, y3, false};
        }
        if ((kAbsZ >> bit) & 1) {
            for (size_t i = 0; i < ts.size(); i++) denoms[i] = qs[i].x.sub(ts[i].x);
            batch_invert(denoms);
            for (size_t i = 0; i < ts.size(); i++) {
                lambdas[i] = qs[i].y.sub(ts[i].y).mul(denoms[i]);
                f = f.mul(eval_line(lambdas[i], ts[i], ps[i]).to_fp12());
                Fp2 x3 = lambdas[i].sqr().sub(ts[i].x).sub(qs[i].x);
                Fp2 y3 = lambdas[i].mul(ts[i].x.sub(x3)).sub(ts[i].y);
                ts[i] = {x3, y3, false};
            }
        }
    }
    // z < 0
    return f.conjugate();
}

Fp12 final_exponentiation(const Fp12& f) {
    // easy part: f^((p^6 - 1)(p^2 + 1))
    Fp12 t = f.conjugate().mul(f.inverse());
    t = t.frobenius().frobenius().mul(t);

    // hard part: generic NAF exponentiation by (p^4 - p^2 + 1)/r; inversions
    // in the cyclotomic subgroup are conjugations
    const auto& naf = FieldContext::get().final_exp_naf;
    Fp12 base = t;
    Fp12 base_inv = t.conjugate();
    Fp12 acc = Fp12::one();
    for (int8_t d : naf) {
        acc = acc.sqr();
        if (d == 1) acc = acc.mul(base);
        if (d == -1) acc = acc.mul(base_inv);
    }
    return acc;
}

Fp12 pairing(const G1Affine& p, const G2Affine& q) {
    return final_exponentiation(multi_miller_loop({{p, q}}));
}

bool pairing_product_is_one(const std::vector<std::pair<G1Affine, G2Affine>>& pairs) {
    return final_exponentiation(multi_miller_loop(pairs)).is_one();
}

}  // namespace superlight::crypto
