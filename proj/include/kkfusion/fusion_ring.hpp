#pragma once

#include "kkfusion/cyclotomic.hpp"
#include "kkfusion/kk_class.hpp"
#include "kkfusion/rational.hpp"
#include "kkfusion/report.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kkfusion {

// Element of the Grothendieck ring: an integer coordinate vector over the
// basis of sector classes. Negative coordinates are formal differences.
class KRingElement {
public:
    explicit KRingElement(std::size_t rank) : coords_(rank) {}
    explicit KRingElement(std::vector<Int> coords) : coords_(std::move(coords)) {}
    static KRingElement basis(std::size_t rank, std::size_t i);

    std::size_t rank() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }

    KRingElement& operator+=(const KRingElement& o);
    KRingElement& operator-=(const KRingElement& o);
    friend KRingElement operator+(KRingElement a, const KRingElement& b) { return a += b; }
    friend KRingElement operator-(KRingElement a, const KRingElement& b) { return a -= b; }
    friend KRingElement operator*(const Int& c, KRingElement x);
    friend bool operator==(const KRingElement& a, const KRingElement& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const KRingElement& a, const KRingElement& b) { return !(a == b); }

private:
    std::vector<Int> coords_;
};

struct FusionEntry {
    std::size_t i, j, k;
    Int value;  // N_{ij}^k
};

// Fusion semiring data: n sector labels (vacuum pinned to index 0) and the
// nonnegative integer tensor N_{ij}^k. Immutable once constructed; the
// constructor checks shape and nonnegativity, verify_fusion_ring checks the
// ring axioms.
class FusionRing {
public:
    static constexpr std::size_t vacuum = 0;

    FusionRing(std::vector<std::string> labels, const std::vector<FusionEntry>& sparse);
    /// dense_tensor has size n^3 with N_{ij}^k at (i*n + j)*n + k.
    FusionRing(std::vector<std::string> labels, std::vector<Int> dense_tensor);

    std::size_t rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Int& coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * rank_ + j) * rank_ + k];
    }
    std::optional<std::size_t> index_of(const std::string& label) const;
    /// Nonzero entries as quadruples, sorted by (i, j, k).
    std::vector<FusionEntry> sparse() const;

    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.labels_ == b.labels_ && a.tensor_ == b.tensor_;
    }

private:
    std::size_t rank_;
    std::vector<std::string> labels_;
    std::vector<Int> tensor_;
};

/// Checks unit law, commutativity, associativity and duality; one CheckResult
/// per axiom, each failure with its first witness.
VerificationReport verify_fusion_ring(const FusionRing& ring);

/// Matrix of the semiring homomorphism into End(Z^n) at one sector:
/// (M_i)_{kj} = N_{ij}^k, acting on column vectors from the left.
KKClass fusion_matrix(const FusionRing& ring, std::size_t sector);

/// Bilinear extension of the fusion product to the Grothendieck ring.
KRingElement ring_multiply(const FusionRing& ring, const KRingElement& x,
                           const KRingElement& y);

/// The unique conjugate sector i* with N_{i i*}^0 = 1 (ring must verify).
std::size_t dual(const FusionRing& ring, std::size_t sector);

/// Certified Perron radius interval per fusion matrix (power iteration on the
/// positive matrix I + sum_i M_i, Collatz-Wielandt bounds evaluated exactly).
std::vector<RealInterval> quantum_dimensions(const FusionRing& ring);

}  // namespace kkfusion
