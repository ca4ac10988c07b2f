#pragma once

#include <utility>
#include <vector>

#include "curve.hpp"

namespace superlight::crypto {

/// Optimal ate pairing e(P, Q) for P in G1, Q in G2, final exponentiation
/// included. Intended for tests; production checks go through the product
/// form below so the final exponentiation is shared.
Fp12 pairing(const G1Affine& p, const G2Affine& q);

/// True iff the product of pairings over all pairs equals one in GT.
/// Pairs containing an infinity point contribute the identity.
bool pairing_product_is_one(const std::vector<std::pair<G1Affine, G2Affine>>& pairs);

Fp12 multi_miller_loop(const std::vector<std::pair<G1Affine, G2Affine>>& pairs);
Fp12 final_exponentiation(const Fp12& f);

}  // namespace superlight::crypto
