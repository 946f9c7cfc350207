#pragma once

#include "kkfusion/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace kkfusion {

// Complex enclosure: |exact - (re + i*im)| <= rad, all three exact dyadic
// rationals, so the interval statement itself is checkable in exact
// arithmetic.
struct ComplexBall {
    Rational re, im, rad;
};

// Certified real interval [lo, hi].
struct RealInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

namespace detail {
struct CycAccess;
}

// Element of Q(zeta_N), N = order(), stored canonically as coefficients over
// the power basis 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th
// cyclotomic polynomial. Canonical form makes equality coefficient-wise.
// Values are immutable; every operation returns a fresh value.
class CyclotomicNumber {
public:
    CyclotomicNumber() : order_(1), coeffs_(1) {}  // zero in Q(zeta_1) = Q

    static CyclotomicNumber zero(unsigned order);
    static CyclotomicNumber one(unsigned order);
    static CyclotomicNumber from_rational(const Rational& r, unsigned order = 1);
    /// scale * zeta_order^exponent (exponent taken mod order).
    static CyclotomicNumber zeta_power(unsigned order, long exponent,
                                       const Rational& scale = Rational(1));

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    /// Fixed by complex conjugation.
    bool is_real() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

private:
    CyclotomicNumber(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    unsigned order_;
    std::vector<Rational> coeffs_;  // size euler_phi(order_)

    friend struct detail::CycAccess;
};

/// Canonicalizes an exponent->coefficient term list into Q(zeta_order).
CyclotomicNumber cyc_normalize(const std::vector<std::pair<long, Rational>>& terms,
                               unsigned order);

// Binary operations embed mixed orders into Q(zeta_lcm) first.
CyclotomicNumber cyc_add(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyc_sub(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyc_neg(const CyclotomicNumber& a);
CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
/// Multiplicative inverse via extended gcd with Phi_N over Q; throws
/// std::domain_error on zero.
CyclotomicNumber cyc_inv(const CyclotomicNumber& a);
CyclotomicNumber cyc_div(const CyclotomicNumber& a, const CyclotomicNumber& b);
/// Image under zeta_N -> zeta_N^{N-1}; involutive field automorphism.
CyclotomicNumber cyc_conj(const CyclotomicNumber& a);

/// Certified complex enclosure of the exact value; radius shrinks as
/// precision_bits grows. precision_bits >= 32.
ComplexBall cyc_to_float(const CyclotomicNumber& a, unsigned precision_bits);

/// Re-expresses a in Q(zeta_target); target must be a multiple of a.order().
CyclotomicNumber embed(const CyclotomicNumber& a, unsigned target_order);

inline CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return cyc_add(a, b);
}
inline CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return cyc_sub(a, b);
}
inline CyclotomicNumber operator-(const CyclotomicNumber& a) { return cyc_neg(a); }
inline CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return cyc_mul(a, b);
}
CyclotomicNumber operator*(const Rational& c, const CyclotomicNumber& a);
CyclotomicNumber operator*(const Int& c, const CyclotomicNumber& a);

/// sqrt(m) for integer m >= 0, as an exact element of Q(zeta_order) built from
/// quadratic Gauss sums; throws std::invalid_argument when the field is too
/// small to contain it.
CyclotomicNumber sqrt_of_integer(const Int& m, unsigned order);

/// Sign of a provably real value, certified by interval refinement (exact
/// short-circuit for rationals). Throws std::invalid_argument on non-real input.
int certified_sign(const CyclotomicNumber& real_value);

/// Exact ceiling of a provably real value.
Int exact_ceil(const CyclotomicNumber& real_value);

unsigned euler_phi(unsigned n);
/// Coefficients of Phi_n (monic, degree phi(n)), computed by recursive
/// division of x^n - 1 by the Phi_d of proper divisors d.
std::vector<Int> cyclotomic_polynomial(unsigned n);

}  // namespace kkfusion
