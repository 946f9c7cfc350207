#pragma once

#include "kkfusion/cyclotomic.hpp"
#include "kkfusion/fusion_ring.hpp"
#include "kkfusion/kk_class.hpp"
#include "kkfusion/report.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kkfusion {

// Exact modular data: S and the diagonal of T as elements of Q(zeta_N) for a
// declared ambient order N. T carries the global phase, T_ii =
// e^{2 pi i (h_i - c/24)}.
struct ModularData {
    std::size_t rank = 0;
    unsigned ambient_order = 1;
    std::vector<CyclotomicNumber> s_entries;  // n*n, row-major
    std::vector<CyclotomicNumber> t_diag;     // n
    Rational central_charge;
    std::vector<Rational> weights;

    const CyclotomicNumber& s(std::size_t i, std::size_t j) const {
        return s_entries[i * rank + j];
    }
    const CyclotomicNumber& t(std::size_t i) const { return t_diag[i]; }
};

/// Builds T from the weights and central charge. Throws std::invalid_argument
/// when some h_i - c/24 does not have denominator dividing the ambient order,
/// or when shapes are inconsistent.
ModularData make_modular_data(std::size_t rank, unsigned ambient_order,
                              std::vector<CyclotomicNumber> s_entries,
                              const Rational& central_charge,
                              std::vector<Rational> weights);

/// Exact verification of all modular-data invariants: S symmetric, unitary,
/// nondegenerate, T phases well-formed, S^2 = C a permutation with C^2 = I,
/// (ST)^3 = S^2, vacuum column real and positive.
VerificationReport verify_modular_data(const ModularData& md);

/// Fusion tensor from the Verlinde sum N_{ij}^k = sum_l S_il S_jl conj(S_kl)/S_0l,
/// evaluated exactly; the output is verified as a fusion ring. Throws
/// VerlindeError when an entry is not a nonnegative integer (invalid data).
FusionRing verlinde_fusion(const ModularData& md,
                           const std::vector<std::string>* labels = nullptr);

/// The three modular-invariant conditions for an integer matrix Z, evaluated
/// exactly: commutation with S and T, entrywise nonnegativity, Z_00 = 1
/// (the paper's Z_11 in its 1-indexed convention).
VerificationReport check_modular_invariant(const ModularData& md, const KKClass& Z);

struct RationalMatrix {
    std::size_t n = 0;
    std::vector<Rational> a;  // row-major

    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n_) : n(n_), a(n_ * n_) {}
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

/// Basis over Q of {Z rational : ZS = SZ, ZT = TZ}, computed by expanding the
/// commutator equations over the power basis of Q(zeta_N) and running
/// fraction-free Gaussian elimination on the resulting integer system.
/// Returned in reduced echelon form over row-major unknown ordering.
std::vector<RationalMatrix> commutant_basis(const ModularData& md);

struct ModularInvariant {
    KKClass matrix;  // nonnegative integer matrix Z
    /// The same integer matrix read as an element of KK(K_A,K_A) = M_n(Z).
    const KKClass& kk_class() const { return matrix; }

    friend bool operator==(const ModularInvariant& a, const ModularInvariant& b) {
        return a.matrix == b.matrix;
    }
};

struct EnumerationResult {
    std::vector<ModularInvariant> invariants;  // lexicographic by flattened entries
    std::size_t commutant_dimension = 0;
    KKClass entry_bound;  // per-entry cap ceil(mult * d_i d_j) actually used
    Rational bound_multiplier;
};

/// All modular invariants with entries bounded by ceil(mult * d_i d_j),
/// found by walking integer points of the commutant lattice; every result is
/// re-verified by check_modular_invariant. Deterministic output for any jobs
/// count. Throws DegenerateBraidingError when S is singular.
EnumerationResult enumerate_modular_invariants(const ModularData& md,
                                               const Rational& bound_multiplier = Rational(1),
                                               unsigned jobs = 1);

/// d_i = S_i0 / S_00, exact in Q(zeta_N).
std::vector<CyclotomicNumber> exact_quantum_dimensions(const ModularData& md);

}  // namespace kkfusion
