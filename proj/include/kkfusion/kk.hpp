#pragma once

#include "kkfusion/fusion_ring.hpp"
#include "kkfusion/kk_class.hpp"
#include "kkfusion/report.hpp"

#include <optional>

namespace kkfusion {

/// The class j([rho]) of a sector: identical to fusion_matrix under the
/// End(K_0) = M_n(Z) identification.
KKClass kk_from_sector(const FusionRing& ring, std::size_t sector);

/// Additive extension of j to coordinate vectors: sum_i x_i M_i. Nonnegative
/// coordinates land in the image of the semiring homomorphism; arbitrary
/// integers give its unique extension to the Grothendieck ring.
KKClass kk_from_element(const FusionRing& ring, const KRingElement& x);

/// Kasparov product: the class of psi times the class of phi is the class of
/// phi o psi, so under push-forward the matrices compose in reverse:
/// returns matrix(b) . matrix(a).
KKClass kasparov_product(const KKClass& a, const KKClass& b);

/// Pairing KK(C,A) x KK(A,B) -> KK(C,B): x tensor a -> matrix(a) . x.
KRingElement act(const KRingElement& x, const KKClass& a);

/// Exhaustive sector-basis verification: multiplicativity, additivity,
/// unitality, injectivity on the basis, and the identity
/// act(x, j(rho)) = eta_rho(x) for every basis x and sector rho.
VerificationReport verify_theorem2(const FusionRing& ring);

struct PropernessWitness {
    KKClass left, right;             // classes whose products differ by order
    KKClass left_then_right;         // kasparov_product(left, right)
    KKClass right_then_left;         // kasparov_product(right, left)
};

// The image of the fusion ring is commutative, but M_n(Z) is not once n >= 2:
// the witness exhibits a noncommuting pair, so the image is a proper subring.
struct PropernessReport {
    bool j_image_commutes = false;
    std::optional<PropernessWitness> witness;  // engaged iff rank >= 2
};

PropernessReport properness_witness(const FusionRing& ring);

}  // namespace kkfusion
