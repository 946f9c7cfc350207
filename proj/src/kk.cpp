#include "kkfusion/kk.hpp"

#include <stdexcept>

namespace kkfusion {

KKClass kk_from_sector(const FusionRing& ring, std::size_t sector) {
    return fusion_matrix(ring, sector);
}

KKClass kk_from_element(const FusionRing& ring, const KRingElement& x) {
    const std::size_t n = ring.rank();
    if (x.rank() != n) throw std::invalid_argument("rank mismatch");
    KKClass out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        out += x[i] * fusion_matrix(ring, i);
    }
    return out;
}

KKClass kasparov_product(const KKClass& a, const KKClass& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("KK class dimension mismatch");
    // {psi} x {phi} = {phi o psi}: push-forwards compose in reverse order.
    return matmul(b, a);
}

KRingElement act(const KRingElement& x, const KKClass& a) {
    const std::size_t n = a.dim();
    if (x.rank() != n) throw std::invalid_argument("dimension mismatch");
    KRingElement out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) != 0) acc += a.at(i, j) * x[j];
        }
        out[i] = acc;
    }
    return out;
}

VerificationReport verify_theorem2(const FusionRing& ring) {
    const std::size_t n = ring.rank();
    VerificationReport rep;

    std::vector<KKClass> j_img;
    j_img.reserve(n);
    for (std::size_t i = 0; i < n; ++i) j_img.push_back(kk_from_sector(ring, i));

    {
        CheckResult c{"multiplicativity", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                KRingElement prod =
                    ring_multiply(ring, KRingElement::basis(n, i), KRingElement::basis(n, j));
                if (kk_from_element(ring, prod) != kasparov_product(j_img[i], j_img[j])) {
                    c.passed = false;
                    c.witness = "sectors (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"additivity", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                KRingElement sum = KRingElement::basis(n, i) + KRingElement::basis(n, j);
                if (kk_from_element(ring, sum) != j_img[i] + j_img[j]) {
                    c.passed = false;
                    c.witness = "sectors (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"unitality", true, ""};
        if (!j_img[FusionRing::vacuum].is_identity()) {
            c.passed = false;
            c.witness = "j(vacuum) is not the identity matrix";
        }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"injectivity_on_basis", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (j_img[i] == j_img[j]) {
                    c.passed = false;
                    c.witness = "sectors " + std::to_string(i) + " and " + std::to_string(j) +
                                " have equal images";
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    {
        // x times j([rho]) = eta_[rho](x) on the whole sector basis; the right
        // side goes through the fusion product, not the matrix action.
        CheckResult c{"equation_1", true, ""};
        for (std::size_t rho = 0; rho < n && c.passed; ++rho)
            for (std::size_t m = 0; m < n; ++m) {
                KRingElement lhs = act(KRingElement::basis(n, m), j_img[rho]);
                KRingElement rhs =
                    ring_multiply(ring, KRingElement::basis(n, rho), KRingElement::basis(n, m));
                if (lhs != rhs) {
                    c.passed = false;
                    c.witness = "x = e_" + std::to_string(m) + ", rho = " + std::to_string(rho);
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

PropernessReport properness_witness(const FusionRing& ring) {
    const std::size_t n = ring.rank();
    PropernessReport out;

    out.j_image_commutes = true;
    std::vector<KKClass> j_img;
    j_img.reserve(n);
    for (std::size_t i = 0; i < n; ++i) j_img.push_back(kk_from_sector(ring, i));
    for (std::size_t i = 0; i < n && out.j_image_commutes; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matmul(j_img[i], j_img[j]) != matmul(j_img[j], j_img[i])) {
                out.j_image_commutes = false;
                break;
            }

    if (n >= 2) {
        PropernessWitness w{KKClass::matrix_unit(n, 0, 1), KKClass::matrix_unit(n, 1, 0),
                            KKClass(n), KKClass(n)};
        w.left_then_right = kasparov_product(w.left, w.right);
        w.right_then_left = kasparov_product(w.right, w.left);
        out.witness = std::move(w);
    }
    return out;
}

}  // namespace kkfusion
