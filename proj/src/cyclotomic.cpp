// Exact arithmetic in cyclotomic fields Q(zeta_N): canonical representation
// modulo Phi_N, field operations, Gauss-sum square roots, and certified
// complex enclosures via MPFR ball evaluation.

#include "kkfusion/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kkfusion {

namespace {

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact division of integer polynomials, divisor monic.
std::vector<Int> exact_poly_div(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int c = rem[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

// Per-order immutable context: Phi_N and the reduction table
// x^d mod Phi_N for degree <= d <= max_pow.
struct CycContext {
    unsigned order = 1;
    unsigned degree = 1;
    std::vector<Int> phi;
    std::vector<std::vector<Int>> red;
    unsigned max_pow = 0;

    const std::vector<Int>& row(unsigned d) const { return red[d - degree]; }
};

const CycContext& context(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, CycContext> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    CycContext ctx;
    ctx.order = order;
    ctx.phi = cyclotomic_polynomial(order);
    ctx.degree = static_cast<unsigned>(ctx.phi.size() - 1);
    ctx.max_pow = std::max(order - 1, ctx.degree >= 1 ? 2 * ctx.degree - 2 : 0u);

    // x^degree = -(phi_0 + phi_1 x + ... ), then shift-and-reduce upward.
    if (ctx.max_pow >= ctx.degree) {
        std::vector<Int> first(ctx.degree);
        for (unsigned i = 0; i < ctx.degree; ++i) first[i] = -ctx.phi[i];
        ctx.red.push_back(first);
        for (unsigned d = ctx.degree + 1; d <= ctx.max_pow; ++d) {
            const std::vector<Int>& prev = ctx.red.back();
            std::vector<Int> next(ctx.degree);
            for (unsigned i = 1; i < ctx.degree; ++i) next[i] = prev[i - 1];
            const Int& top = prev[ctx.degree - 1];
            if (top != 0) {
                const std::vector<Int>& base = ctx.red.front();
                for (unsigned i = 0; i < ctx.degree; ++i) next[i] += top * base[i];
            }
            ctx.red.push_back(std::move(next));
        }
    }
    return cache.emplace(order, std::move(ctx)).first->second;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Int> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
    static std::mutex mu;
    static std::map<unsigned, std::vector<Int>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Int> result;
    if (n == 1) {
        result = {Int(-1), Int(1)};  // x - 1
    } else {
        std::vector<Int> poly(n + 1);
        poly[0] = -1;
        poly[n] = 1;  // x^n - 1
        for (unsigned d : divisors_of(n)) {
            if (d == n) continue;
            poly = exact_poly_div(poly, cyclotomic_polynomial(d));
        }
        result = std::move(poly);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, result);
    return result;
}

namespace detail {
struct CycAccess {
    static CyclotomicNumber make(unsigned order, std::vector<Rational> coeffs) {
        return CyclotomicNumber(order, std::move(coeffs));
    }
};
}  // namespace detail

namespace {

CyclotomicNumber make_cyc(unsigned order, std::vector<Rational> coeffs) {
    return detail::CycAccess::make(order, std::move(coeffs));
}

// Reduces a dense coefficient vector (indices = powers of zeta, length at most
// max_pow + 1) to the canonical representation modulo Phi_N.
CyclotomicNumber reduce_dense(unsigned order, std::vector<Rational> dense) {
    const CycContext& ctx = context(order);
    for (std::size_t d = dense.size(); d-- > ctx.degree;) {
        if (dense[d].is_zero()) continue;
        const std::vector<Int>& row = ctx.row(static_cast<unsigned>(d));
        for (unsigned i = 0; i < ctx.degree; ++i) {
            if (row[i] != 0) dense[i] += dense[d] * Rational(row[i]);
        }
        dense[d] = Rational(0);
    }
    dense.resize(ctx.degree);
    return make_cyc(order, std::move(dense));
}

std::pair<unsigned, std::pair<CyclotomicNumber, CyclotomicNumber>> to_common_order(
    const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() == b.order()) return {a.order(), {a, b}};
    unsigned l = lcm_u(a.order(), b.order());
    return {l, {embed(a, l), embed(b, l)}};
}

}  // namespace

CyclotomicNumber CyclotomicNumber::zero(unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    return make_cyc(order, std::vector<Rational>(context(order).degree));
}

CyclotomicNumber CyclotomicNumber::one(unsigned order) {
    return from_rational(Rational(1), order);
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& r, unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rational> c(context(order).degree);
    c[0] = r;
    return make_cyc(order, std::move(c));
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned order, long exponent,
                                              const Rational& scale) {
    return cyc_normalize({{exponent, scale}}, order);
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

bool CyclotomicNumber::is_real() const { return cyc_conj(*this) == *this; }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [l, ab] = to_common_order(a, b);
    (void)l;
    return ab.first.coeffs() == ab.second.coeffs();
}

CyclotomicNumber cyc_normalize(const std::vector<std::pair<long, Rational>>& terms,
                               unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    const CycContext& ctx = context(order);
    std::vector<Rational> dense(std::max<unsigned>(ctx.degree, order));
    for (const auto& [e, c] : terms) {
        long r = e % static_cast<long>(order);
        if (r < 0) r += order;
        dense[static_cast<std::size_t>(r)] += c;
    }
    return reduce_dense(order, std::move(dense));
}

CyclotomicNumber cyc_add(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [order, ab] = to_common_order(a, b);
    std::vector<Rational> c = ab.first.coeffs();
    const auto& bc = ab.second.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += bc[i];
    return make_cyc(order, std::move(c));
}

CyclotomicNumber cyc_neg(const CyclotomicNumber& a) {
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x = -x;
    return make_cyc(a.order(), std::move(c));
}

CyclotomicNumber cyc_sub(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return cyc_add(a, cyc_neg(b));
}

CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [order, ab] = to_common_order(a, b);
    const CycContext& ctx = context(order);
    const auto& ac = ab.first.coeffs();
    const auto& bc = ab.second.coeffs();

    // Clear denominators so the convolution and the reduction run over Z.
    Int da = 1, db = 1;
    for (const auto& c : ac) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.denominator().get_mpz_t());
    for (const auto& c : bc) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Int> A(ctx.degree), B(ctx.degree);
    for (unsigned i = 0; i < ctx.degree; ++i) {
        A[i] = ac[i].numerator() * (da / ac[i].denominator());
        B[i] = bc[i].numerator() * (db / bc[i].denominator());
    }

    std::vector<Int> conv(2 * ctx.degree - 1);
    for (unsigned i = 0; i < ctx.degree; ++i) {
        if (A[i] == 0) continue;
        for (unsigned j = 0; j < ctx.degree; ++j) {
            if (B[j] != 0) conv[i + j] += A[i] * B[j];
        }
    }
    for (std::size_t d = conv.size(); d-- > ctx.degree;) {
        if (conv[d] == 0) continue;
        const std::vector<Int>& row = ctx.row(static_cast<unsigned>(d));
        for (unsigned i = 0; i < ctx.degree; ++i) {
            if (row[i] != 0) conv[i] += conv[d] * row[i];
        }
        conv[d] = 0;
    }

    Int den = da * db;
    std::vector<Rational> out(ctx.degree);
    for (unsigned i = 0; i < ctx.degree; ++i) out[i] = Rational(conv[i], den);
    return make_cyc(order, std::move(out));
}

namespace {

using QPoly = std::vector<Rational>;  // coefficient vector, may carry high zeros

std::size_t poly_degree(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1].is_zero()) --d;
    return d;  // number of meaningful coefficients; 0 means the zero polynomial
}

// r0 -= q * r1 with q the quotient of long division; returns the quotient.
QPoly poly_divmod(QPoly& r0, const QPoly& r1) {
    std::size_t d1 = poly_degree(r1);
    QPoly q(r0.size());
    const Rational& lead = r1[d1 - 1];
    while (true) {
        std::size_t d0 = poly_degree(r0);
        if (d0 < d1) break;
        Rational f = r0[d0 - 1] / lead;
        std::size_t shift = d0 - d1;
        q[shift] += f;
        for (std::size_t i = 0; i < d1; ++i) r0[shift + i] -= f * r1[i];
    }
    return q;
}

}  // namespace

CyclotomicNumber cyc_inv(const CyclotomicNumber& a) {
    if (a.is_zero()) throw std::domain_error("cyclotomic division by zero");
    if (auto r = a.as_rational())
        return CyclotomicNumber::from_rational(Rational(1) / *r, a.order());

    const CycContext& ctx = context(a.order());
    // Extended Euclid for gcd(a, Phi_N) over Q[x]; Phi_N irreducible, so the
    // gcd is a nonzero constant and the cofactor of a is the inverse.
    QPoly r0(ctx.phi.size());
    for (std::size_t i = 0; i < ctx.phi.size(); ++i) r0[i] = Rational(ctx.phi[i]);
    QPoly r1 = a.coeffs();
    QPoly t0(ctx.degree + 1), t1(ctx.degree + 1);
    t1[0] = Rational(1);

    while (poly_degree(r1) > 1) {
        QPoly q = poly_divmod(r0, r1);  // r0 becomes the remainder
        std::swap(r0, r1);
        // t0 -= q * t1, then swap
        QPoly qt(t1.size());
        std::size_t dq = poly_degree(q), dt = poly_degree(t1);
        for (std::size_t i = 0; i < dq; ++i) {
            if (q[i].is_zero()) continue;
            for (std::size_t j = 0; j < dt && i + j < qt.size(); ++j) qt[i + j] += q[i] * t1[j];
        }
        for (std::size_t i = 0; i < t0.size(); ++i) t0[i] -= qt[i];
        std::swap(t0, t1);
    }
    if (poly_degree(r1) == 0)
        throw std::logic_error("nonzero element shares a factor with Phi_N");

    const Rational& unit = r1[0];
    std::vector<Rational> out(ctx.degree);
    for (std::size_t i = 0; i < ctx.degree && i < t1.size(); ++i) out[i] = t1[i] / unit;
    return make_cyc(a.order(), std::move(out));
}

CyclotomicNumber cyc_div(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [order, ab] = to_common_order(a, b);
    (void)order;
    return cyc_mul(ab.first, cyc_inv(ab.second));
}

CyclotomicNumber cyc_conj(const CyclotomicNumber& a) {
    std::vector<std::pair<long, Rational>> terms;
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero())
            terms.emplace_back(static_cast<long>(a.order()) - static_cast<long>(i), c[i]);
    }
    return cyc_normalize(terms, a.order());
}

CyclotomicNumber embed(const CyclotomicNumber& a, unsigned target_order) {
    if (target_order == a.order()) return a;
    if (target_order == 0 || target_order % a.order() != 0)
        throw std::invalid_argument("embedding target is not a multiple of the source order");
    long scale = static_cast<long>(target_order / a.order());
    std::vector<std::pair<long, Rational>> terms;
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) terms.emplace_back(static_cast<long>(i) * scale, c[i]);
    }
    return cyc_normalize(terms, target_order);
}

CyclotomicNumber operator*(const Rational& c, const CyclotomicNumber& a) {
    std::vector<Rational> out = a.coeffs();
    for (auto& x : out) x *= c;
    return make_cyc(a.order(), std::move(out));
}

CyclotomicNumber operator*(const Int& c, const CyclotomicNumber& a) {
    return Rational(c) * a;
}

// ---------------------------------------------------------------------------
// Ball evaluation (MPFR). Midpoints are computed at precision wp with
// round-to-nearest; every operation adds one ulp of the result plus the
// propagated input radii, so |exact - mid| <= rad always holds.

namespace {

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    ~Mpfr() { mpfr_clear(v); }
};

constexpr mpfr_prec_t kRadPrec = 32;

struct Ball {
    Mpfr mid;
    Mpfr rad;  // nonnegative, rounded up
    explicit Ball(mpfr_prec_t wp) : mid(wp), rad(kRadPrec) {
        mpfr_set_zero(mid.v, 1);
        mpfr_set_zero(rad.v, 1);
    }
};

// Upper bound on one ulp of x at precision wp (generous: 2^{exp - wp + 1}).
void add_ulp(mpfr_t rad, const mpfr_t x, mpfr_prec_t wp, int ternary) {
    if (ternary == 0) return;  // exact
    long e = mpfr_zero_p(x) ? -static_cast<long>(wp) : mpfr_get_exp(x);
    Mpfr ulp(kRadPrec);
    mpfr_set_ui_2exp(ulp.v, 1, e - static_cast<long>(wp) + 1, MPFR_RNDU);
    mpfr_add(rad, rad, ulp.v, MPFR_RNDU);
}

void ball_set_q(Ball& out, const mpq_class& q, mpfr_prec_t wp) {
    int t = mpfr_set_q(out.mid.v, q.get_mpq_t(), MPFR_RNDN);
    mpfr_set_zero(out.rad.v, 1);
    add_ulp(out.rad.v, out.mid.v, wp, t);
}

void ball_add(Ball& out, const Ball& a, const Ball& b, mpfr_prec_t wp) {
    int t = mpfr_add(out.mid.v, a.mid.v, b.mid.v, MPFR_RNDN);
    mpfr_add(out.rad.v, a.rad.v, b.rad.v, MPFR_RNDU);
    add_ulp(out.rad.v, out.mid.v, wp, t);
}

void ball_mul(Ball& out, const Ball& a, const Ball& b, mpfr_prec_t wp) {
    Mpfr absa(kRadPrec), absb(kRadPrec), term(kRadPrec), acc(kRadPrec);
    mpfr_abs(absa.v, a.mid.v, MPFR_RNDU);
    mpfr_abs(absb.v, b.mid.v, MPFR_RNDU);
    // |a||rb| + |b||ra| + ra rb
    mpfr_mul(term.v, absa.v, b.rad.v, MPFR_RNDU);
    mpfr_set(acc.v, term.v, MPFR_RNDU);
    mpfr_mul(term.v, absb.v, a.rad.v, MPFR_RNDU);
    mpfr_add(acc.v, acc.v, term.v, MPFR_RNDU);
    mpfr_mul(term.v, a.rad.v, b.rad.v, MPFR_RNDU);
    mpfr_add(acc.v, acc.v, term.v, MPFR_RNDU);
    int t = mpfr_mul(out.mid.v, a.mid.v, b.mid.v, MPFR_RNDN);
    mpfr_set(out.rad.v, acc.v, MPFR_RNDU);
    add_ulp(out.rad.v, out.mid.v, wp, t);
}

// cos/sin of 2*pi*(k/n) as balls; |trig'| <= 1 bounds the argument error.
void ball_cos_sin_2pi(Ball& c, Ball& s, long k, unsigned n, mpfr_prec_t wp) {
    Ball angle(wp);
    int t = mpfr_const_pi(angle.mid.v, MPFR_RNDN);
    add_ulp(angle.rad.v, angle.mid.v, wp, t);
    mpq_class f(2 * k, n);
    f.canonicalize();
    // scale the pi ball by the exact rational f
    Mpfr absf(kRadPrec);
    mpfr_set_q(absf.v, mpq_class(abs(f)).get_mpq_t(), MPFR_RNDU);
    mpfr_mul(angle.rad.v, angle.rad.v, absf.v, MPFR_RNDU);
    t = mpfr_mul_q(angle.mid.v, angle.mid.v, f.get_mpq_t(), MPFR_RNDN);
    add_ulp(angle.rad.v, angle.mid.v, wp, t);

    t = mpfr_cos(c.mid.v, angle.mid.v, MPFR_RNDN);
    mpfr_add(c.rad.v, c.rad.v, angle.rad.v, MPFR_RNDU);
    add_ulp(c.rad.v, c.mid.v, wp, t);
    t = mpfr_sin(s.mid.v, angle.mid.v, MPFR_RNDN);
    mpfr_add(s.rad.v, s.rad.v, angle.rad.v, MPFR_RNDU);
    add_ulp(s.rad.v, s.mid.v, wp, t);
}

Rational mpfr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    if (e >= 0) {
        Int v = m << static_cast<unsigned long>(e);
        return Rational(v);
    }
    Int den = Int(1) << static_cast<unsigned long>(-e);
    return Rational(m, den);
}

Rational mpfr_to_rational_up(const mpfr_t x) {
    // exact dyadic conversion, so "up" needs no extra slack
    return mpfr_to_rational(x);
}

}  // namespace

ComplexBall cyc_to_float(const CyclotomicNumber& a, unsigned precision_bits) {
    if (precision_bits < 32) throw std::invalid_argument("precision must be at least 32 bits");
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(precision_bits) + 24;

    Ball re(wp), im(wp);
    const auto& coeffs = a.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Ball c(wp), s(wp), coef(wp), term(wp), acc(wp);
        ball_cos_sin_2pi(c, s, static_cast<long>(i), a.order(), wp);
        ball_set_q(coef, coeffs[i].raw(), wp);
        ball_mul(term, coef, c, wp);
        ball_add(acc, re, term, wp);
        mpfr_swap(acc.mid.v, re.mid.v);
        mpfr_swap(acc.rad.v, re.rad.v);
        ball_mul(term, coef, s, wp);
        ball_add(acc, im, term, wp);
        mpfr_swap(acc.mid.v, im.mid.v);
        mpfr_swap(acc.rad.v, im.rad.v);
    }

    Mpfr total(kRadPrec);
    mpfr_add(total.v, re.rad.v, im.rad.v, MPFR_RNDU);
    return ComplexBall{mpfr_to_rational(re.mid.v), mpfr_to_rational(im.mid.v),
                       mpfr_to_rational_up(total.v)};
}

CyclotomicNumber sqrt_of_integer(const Int& m, unsigned order) {
    if (m < 0) throw std::invalid_argument("sqrt_of_integer needs a nonnegative argument");
    if (!m.fits_ulong_p()) throw std::invalid_argument("sqrt_of_integer argument too large");
    unsigned long v = m.get_ui();
    if (v == 0) return CyclotomicNumber::zero(order);

    // v = square * squarefree
    unsigned long square_root = 1;
    std::vector<unsigned long> odd_primes;
    bool has_two = false;
    unsigned long rest = v;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) square_root *= p;
        if (e % 2 == 1) {
            if (p == 2)
                has_two = true;
            else
                odd_primes.push_back(p);
        }
    }
    if (rest > 1) odd_primes.push_back(rest);

    CyclotomicNumber out =
        CyclotomicNumber::from_rational(Rational(Int(square_root)), order);
    if (has_two) {
        if (order % 8 != 0)
            throw std::invalid_argument("sqrt(2) needs 8 | order");
        long eighth = static_cast<long>(order / 8);
        out = cyc_mul(out, cyc_normalize({{eighth, Rational(1)}, {-eighth, Rational(1)}}, order));
    }
    for (unsigned long p : odd_primes) {
        if (order % p != 0)
            throw std::invalid_argument("sqrt of prime p needs p | order");
        // quadratic Gauss sum: sum_j zeta_p^{j^2} = sqrt(p) for p = 1 mod 4,
        // i*sqrt(p) for p = 3 mod 4
        std::vector<std::pair<long, Rational>> terms;
        long step = static_cast<long>(order / p);
        for (unsigned long j = 0; j < p; ++j)
            terms.emplace_back(static_cast<long>((j * j) % p) * step, Rational(1));
        CyclotomicNumber g = cyc_normalize(terms, order);
        if (p % 4 == 3) {
            if (order % 4 != 0)
                throw std::invalid_argument("sqrt of p = 3 mod 4 needs 4 | order");
            // sqrt(p) = -i * g
            g = cyc_mul(g, CyclotomicNumber::zeta_power(order, 3L * (order / 4)));
        }
        out = cyc_mul(out, g);
    }
    return out;
}

namespace {

constexpr unsigned kMaxCertifyBits = 1u << 14;

}  // namespace

int certified_sign(const CyclotomicNumber& a) {
    if (a.is_zero()) return 0;
    if (auto r = a.as_rational()) return r->sign();
    if (!a.is_real()) throw std::invalid_argument("certified_sign needs a real value");
    for (unsigned prec = 64; prec <= kMaxCertifyBits; prec *= 2) {
        ComplexBall b = cyc_to_float(a, prec);
        if (b.re - b.rad > Rational(0)) return 1;
        if (b.re + b.rad < Rational(0)) return -1;
    }
    throw std::logic_error("sign certification did not converge");
}

Int exact_ceil(const CyclotomicNumber& a) {
    if (auto r = a.as_rational()) return r->ceil();
    if (!a.is_real()) throw std::invalid_argument("exact_ceil needs a real value");
    for (unsigned prec = 64; prec <= kMaxCertifyBits; prec *= 2) {
        ComplexBall b = cyc_to_float(a, prec);
        Int lo = (b.re - b.rad).ceil();
        Int hi = (b.re + b.rad).ceil();
        if (lo == hi) return lo;
    }
    throw std::logic_error("ceiling certification did not converge");
}

}  // namespace kkfusion
