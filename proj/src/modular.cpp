// Exact modular data (S,T), SL(2,Z) relation checks, Verlinde fusion, and the
// classification of modular invariants: commutant by fraction-free Gaussian
// elimination, then a pruned walk over the integer points of the commutant
// lattice inside the quantum-dimension entry bounds.

#include "kkfusion/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace kkfusion {

namespace {

std::string ij(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

using CycVec = std::vector<CyclotomicNumber>;

CycVec mat_mul(std::size_t n, const CycVec& a, const CycVec& b) {
    CycVec out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CyclotomicNumber acc = CyclotomicNumber::zero(a[0].order());
            for (std::size_t m = 0; m < n; ++m)
                acc = cyc_add(acc, cyc_mul(a[i * n + m], b[m * n + j]));
            out[i * n + j] = std::move(acc);
        }
    return out;
}

bool mat_is_identity(std::size_t n, const CycVec& a) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const CyclotomicNumber& v = a[i * n + j];
            if (i == j ? v != CyclotomicNumber::one(v.order()) : !v.is_zero()) return false;
        }
    return true;
}

// Rank over Q(zeta_N) by plain Gaussian elimination with field inverses.
std::size_t field_rank(std::size_t n, CycVec m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = rank; r < n; ++r)
            if (!m[r * n + col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m[rank * n + j], m[piv * n + j]);
        CyclotomicNumber inv = cyc_inv(m[rank * n + col]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (m[r * n + col].is_zero()) continue;
            CyclotomicNumber f = cyc_mul(m[r * n + col], inv);
            for (std::size_t j = col; j < n; ++j)
                m[r * n + j] = cyc_sub(m[r * n + j], cyc_mul(f, m[rank * n + j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ModularData make_modular_data(std::size_t rank, unsigned ambient_order,
                              std::vector<CyclotomicNumber> s_entries,
                              const Rational& central_charge,
                              std::vector<Rational> weights) {
    if (rank == 0) throw std::invalid_argument("modular data needs rank >= 1");
    if (ambient_order == 0) throw std::invalid_argument("ambient order must be positive");
    if (s_entries.size() != rank * rank)
        throw std::invalid_argument("S entry count does not match rank");
    if (weights.size() != rank) throw std::invalid_argument("weight count does not match rank");

    ModularData md;
    md.rank = rank;
    md.ambient_order = ambient_order;
    md.central_charge = central_charge;
    md.weights = std::move(weights);
    md.s_entries.reserve(rank * rank);
    for (auto& e : s_entries) {
        if (ambient_order % e.order() != 0)
            throw std::invalid_argument("S entry order does not divide the ambient order");
        md.s_entries.push_back(embed(e, ambient_order));
    }

    md.t_diag.reserve(rank);
    const Rational c24 = central_charge / Rational(24);
    for (std::size_t i = 0; i < rank; ++i) {
        Rational e = (md.weights[i] - c24) * Rational(Int(ambient_order));
        if (!e.is_integer())
            throw std::invalid_argument(
                "T phase exponent h_" + std::to_string(i) +
                " - c/24 does not have denominator dividing the ambient order");
        long k = static_cast<long>(mpz_fdiv_ui(e.numerator().get_mpz_t(), ambient_order));
        md.t_diag.push_back(CyclotomicNumber::zeta_power(ambient_order, k));
    }
    return md;
}

VerificationReport verify_modular_data(const ModularData& md) {
    const std::size_t n = md.rank;
    const unsigned N = md.ambient_order;
    VerificationReport rep;

    {
        CheckResult c{"dimensions", true, ""};
        if (md.s_entries.size() != n * n || md.t_diag.size() != n || md.weights.size() != n) {
            c.passed = false;
            c.witness = "field sizes inconsistent with rank";
        } else {
            for (const auto& e : md.s_entries)
                if (e.order() != N) {
                    c.passed = false;
                    c.witness = "S entry not expressed at the ambient order";
                    break;
                }
        }
        rep.checks.push_back(c);
        if (!c.passed) return rep;  // nothing below is meaningful
    }

    {
        CheckResult c{"s_symmetric", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (md.s(i, j) != md.s(j, i)) {
                    c.passed = false;
                    c.witness = ij(i, j);
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    bool unitary = false;
    {
        CheckResult c{"s_unitary", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CyclotomicNumber acc = CyclotomicNumber::zero(N);
                for (std::size_t m = 0; m < n; ++m)
                    acc = cyc_add(acc, cyc_mul(md.s(i, m), cyc_conj(md.s(j, m))));
                CyclotomicNumber expect =
                    (i == j) ? CyclotomicNumber::one(N) : CyclotomicNumber::zero(N);
                if (acc != expect) {
                    c.passed = false;
                    c.witness = ij(i, j);
                    break;
                }
            }
        unitary = c.passed;
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"s_nondegenerate", true, ""};
        if (!unitary) {
            std::size_t r = field_rank(n, md.s_entries);
            if (r < n) {
                c.passed = false;
                c.witness = "rank " + std::to_string(r) + " < " + std::to_string(n);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"t_phases", true, ""};
        const Rational c24 = md.central_charge / Rational(24);
        for (std::size_t i = 0; i < n; ++i) {
            Rational e = (md.weights[i] - c24) * Rational(Int(N));
            if (!e.is_integer()) {
                c.passed = false;
                c.witness = "h_" + std::to_string(i) + " - c/24 not in (1/N)Z";
                break;
            }
            long k = static_cast<long>(mpz_fdiv_ui(e.numerator().get_mpz_t(), N));
            if (md.t(i) != CyclotomicNumber::zeta_power(N, k)) {
                c.passed = false;
                c.witness = "T_" + std::to_string(i) + std::to_string(i) +
                            " does not match e^{2 pi i (h_i - c/24)}";
                break;
            }
        }
        rep.checks.push_back(std::move(c));
    }

    CycVec s2 = mat_mul(n, md.s_entries, md.s_entries);
    {
        CheckResult c{"s_squared_permutation", true, ""};
        std::vector<std::size_t> row_ones(n, 0), col_ones(n, 0);
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const CyclotomicNumber& v = s2[i * n + j];
                if (v.is_zero()) continue;
                if (v == CyclotomicNumber::one(N)) {
                    ++row_ones[i];
                    ++col_ones[j];
                } else {
                    c.passed = false;
                    c.witness = "entry " + ij(i, j) + " not in {0,1}";
                    break;
                }
            }
        if (c.passed)
            for (std::size_t i = 0; i < n; ++i)
                if (row_ones[i] != 1 || col_ones[i] != 1) {
                    c.passed = false;
                    c.witness = "row/column " + std::to_string(i) + " is not a permutation line";
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"charge_conjugation_involution", true, ""};
        if (!mat_is_identity(n, mat_mul(n, s2, s2))) {
            c.passed = false;
            c.witness = "S^4 != I";
        }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"st_cubed", true, ""};
        CycVec st(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) st[i * n + j] = cyc_mul(md.s(i, j), md.t(j));
        CycVec st3 = mat_mul(n, mat_mul(n, st, st), st);
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (st3[i * n + j] != s2[i * n + j]) {
                    c.passed = false;
                    c.witness = ij(i, j);
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"vacuum_column_real_positive", true, ""};
        for (std::size_t i = 0; i < n; ++i) {
            const CyclotomicNumber& v = md.s(i, 0);
            if (!v.is_real()) {
                c.passed = false;
                c.witness = "S_" + std::to_string(i) + "0 not real";
                break;
            }
            if (certified_sign(v) <= 0) {
                c.passed = false;
                c.witness = "S_" + std::to_string(i) + "0 not positive";
                break;
            }
        }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

FusionRing verlinde_fusion(const ModularData& md, const std::vector<std::string>* labels) {
    const std::size_t n = md.rank;
    const unsigned N = md.ambient_order;

    CycVec inv0(n);
    for (std::size_t l = 0; l < n; ++l) {
        if (md.s(0, l).is_zero())
            throw VerlindeError("vacuum row of S contains a zero entry");
        inv0[l] = cyc_inv(md.s(0, l));
    }
    CycVec conj_s(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) conj_s[k * n + l] = cyc_conj(md.s(k, l));

    std::vector<Int> tensor(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            CycVec p(n);
            for (std::size_t l = 0; l < n; ++l)
                p[l] = cyc_mul(cyc_mul(md.s(i, l), md.s(j, l)), inv0[l]);
            for (std::size_t k = 0; k < n; ++k) {
                CyclotomicNumber acc = CyclotomicNumber::zero(N);
                for (std::size_t l = 0; l < n; ++l)
                    acc = cyc_add(acc, cyc_mul(p[l], conj_s[k * n + l]));
                auto r = acc.as_rational();
                if (!r || !r->is_integer() || r->sign() < 0)
                    throw VerlindeError("Verlinde sum at (i,j,k) = (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) +
                                        ") is not a nonnegative integer");
                tensor[(i * n + j) * n + k] = r->numerator();
                tensor[(j * n + i) * n + k] = r->numerator();
            }
        }
    }

    std::vector<std::string> names;
    if (labels) {
        names = *labels;
    } else {
        names.reserve(n);
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    FusionRing ring(std::move(names), std::move(tensor));
    VerificationReport rep = verify_fusion_ring(ring);
    if (!rep.all_passed())
        throw VerlindeError("Verlinde output violates fusion axioms: " + rep.summary());
    return ring;
}

VerificationReport check_modular_invariant(const ModularData& md, const KKClass& Z) {
    const std::size_t n = md.rank;
    if (Z.dim() != n) throw std::invalid_argument("invariant dimension does not match rank");
    VerificationReport rep;

    {
        CheckResult c{"modular_invariance", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CyclotomicNumber zs = CyclotomicNumber::zero(md.ambient_order);
                CyclotomicNumber sz = zs;
                for (std::size_t m = 0; m < n; ++m) {
                    if (Z.at(i, m) != 0) zs = cyc_add(zs, Z.at(i, m) * md.s(m, j));
                    if (Z.at(m, j) != 0) sz = cyc_add(sz, Z.at(m, j) * md.s(i, m));
                }
                if (zs != sz) {
                    c.passed = false;
                    c.witness = "ZS != SZ at " + ij(i, j);
                    break;
                }
            }
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (Z.at(i, j) != 0 && md.t(i) != md.t(j)) {
                    c.passed = false;
                    c.witness = "ZT != TZ at " + ij(i, j);
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"positivity", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (Z.at(i, j) < 0) {
                    c.passed = false;
                    c.witness = "entry " + ij(i, j) + " = " + Z.at(i, j).get_str();
                    break;
                }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"vacuum_normalization", true, ""};
        if (Z.at(0, 0) != 1) {
            c.passed = false;
            c.witness = "Z_00 = " + Z.at(0, 0).get_str();
        }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Commutant: linear system over Q from the two commutator equations, expanded
// over the power basis of Q(zeta_N).

namespace {

struct Echelon {
    std::vector<std::vector<Int>> rows;      // echelon form
    std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) row echelon; pivots chosen with minimal absolute
// value for size control.
Echelon bareiss(std::vector<std::vector<Int>> m, std::size_t ncols) {
    Echelon ech;
    if (m.empty()) return ech;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t piv = m.size();
        for (std::size_t rr = r; rr < m.size(); ++rr) {
            if (m[rr][col] == 0) continue;
            if (piv == m.size() ||
                mpz_cmpabs(m[rr][col].get_mpz_t(), m[piv][col].get_mpz_t()) < 0)
                piv = rr;
        }
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t rr = r + 1; rr < m.size(); ++rr) {
            for (std::size_t cc = col + 1; cc < ncols; ++cc) {
                Int v = m[r][col] * m[rr][cc] - m[rr][col] * m[r][cc];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[rr][cc] = std::move(v);
            }
            m[rr][col] = 0;
        }
        prev = m[r][col];
        ech.pivot_cols.push_back(col);
        ++r;
    }
    m.resize(r);
    ech.rows = std::move(m);
    return ech;
}

// Canonical kernel basis: one vector per free column f (ascending), with
// entry 1 at f and 0 at every other free column.
std::vector<std::vector<Rational>> kernel_basis(const Echelon& ech, std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols);
        v[f] = Rational(1);
        for (std::size_t r = ech.rows.size(); r-- > 0;) {
            std::size_t c = ech.pivot_cols[r];
            Rational acc(0);
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (ech.rows[r][j] != 0 && !v[j].is_zero())
                    acc += Rational(ech.rows[r][j]) * v[j];
            }
            v[c] = -acc / Rational(ech.rows[r][c]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct CommutantSystem {
    std::vector<std::pair<std::size_t, std::size_t>> positions;  // T-compatible, row-major
    std::vector<std::vector<Rational>> kernel;  // basis over the positions
    std::vector<std::size_t> free_cols;         // indices into positions, ascending
};

CommutantSystem solve_commutant(const ModularData& md) {
    const std::size_t n = md.rank;
    const unsigned degree = euler_phi(md.ambient_order);

    CommutantSystem cs;
    // Commutation with diagonal T forces Z_ij = 0 unless T_ii = T_jj; only the
    // surviving positions stay unknowns.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (md.t(i) == md.t(j)) cs.positions.emplace_back(i, j);

    const std::size_t u = cs.positions.size();
    std::vector<std::vector<Int>> rows;
    std::vector<Rational> coeff_row(u);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // equation (ZS - SZ)_{ij} = 0, coefficients over the unknowns
            std::vector<const std::vector<Rational>*> cyc_coeffs(u, nullptr);
            std::vector<CyclotomicNumber> scratch(u);
            for (std::size_t t = 0; t < u; ++t) {
                auto [p, q] = cs.positions[t];
                CyclotomicNumber c = CyclotomicNumber::zero(md.ambient_order);
                bool nonzero = false;
                if (p == i) {
                    c = cyc_add(c, md.s(q, j));
                    nonzero = true;
                }
                if (q == j) {
                    c = cyc_sub(c, md.s(i, p));
                    nonzero = true;
                }
                if (nonzero && !c.is_zero()) {
                    scratch[t] = std::move(c);
                    cyc_coeffs[t] = &scratch[t].coeffs();
                }
            }
            for (unsigned slot = 0; slot < degree; ++slot) {
                bool any = false;
                Int den = 1;
                for (std::size_t t = 0; t < u; ++t) {
                    if (!cyc_coeffs[t]) {
                        coeff_row[t] = Rational(0);
                        continue;
                    }
                    coeff_row[t] = (*cyc_coeffs[t])[slot];
                    if (!coeff_row[t].is_zero()) {
                        any = true;
                        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                coeff_row[t].denominator().get_mpz_t());
                    }
                }
                if (!any) continue;
                std::vector<Int> irow(u);
                for (std::size_t t = 0; t < u; ++t) {
                    if (!coeff_row[t].is_zero())
                        irow[t] = coeff_row[t].numerator() * (den / coeff_row[t].denominator());
                }
                rows.push_back(std::move(irow));
            }
        }
    }

    Echelon ech = bareiss(std::move(rows), u);
    cs.kernel = kernel_basis(ech, u);
    std::vector<bool> is_pivot(u, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
    for (std::size_t t = 0; t < u; ++t)
        if (!is_pivot[t]) cs.free_cols.push_back(t);
    return cs;
}

}  // namespace

std::vector<RationalMatrix> commutant_basis(const ModularData& md) {
    CommutantSystem cs = solve_commutant(md);
    std::vector<RationalMatrix> out;
    out.reserve(cs.kernel.size());
    for (const auto& v : cs.kernel) {
        RationalMatrix m(md.rank);
        for (std::size_t t = 0; t < cs.positions.size(); ++t)
            m.at(cs.positions[t].first, cs.positions[t].second) = v[t];
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<CyclotomicNumber> exact_quantum_dimensions(const ModularData& md) {
    const std::size_t n = md.rank;
    if (md.s(0, 0).is_zero()) throw DegenerateBraidingError("S_00 = 0");
    CyclotomicNumber inv00 = cyc_inv(md.s(0, 0));
    std::vector<CyclotomicNumber> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(cyc_mul(md.s(i, 0), inv00));
    return d;
}

namespace {

// DFS over integer values of the free coordinates; per-position running sums
// with precomputed achievable min/max of the remaining levels give sound
// branch-and-bound pruning.
struct WalkContext {
    const ModularData* md = nullptr;
    const CommutantSystem* cs = nullptr;
    std::size_t levels = 0;
    std::vector<Int> level_lo, level_hi;          // value range per level
    std::vector<Rational> window_lo, window_hi;   // per position
    std::vector<std::vector<Rational>> minrem, maxrem;  // [level][position]
};

void walk(const WalkContext& w, std::size_t level, std::vector<Rational>& sums,
          std::vector<ModularInvariant>& out) {
    const std::size_t u = w.cs->positions.size();
    for (std::size_t t = 0; t < u; ++t) {
        if (sums[t] + w.maxrem[level][t] < w.window_lo[t]) return;
        if (sums[t] + w.minrem[level][t] > w.window_hi[t]) return;
    }
    if (level == w.levels) {
        KKClass Z(w.md->rank);
        for (std::size_t t = 0; t < u; ++t) {
            if (!sums[t].is_integer()) return;
            Z.at(w.cs->positions[t].first, w.cs->positions[t].second) = sums[t].numerator();
        }
        if (check_modular_invariant(*w.md, Z).all_passed())
            out.push_back(ModularInvariant{std::move(Z)});
        return;
    }
    const std::vector<Rational>& vec = w.cs->kernel[level];
    std::vector<Rational> next(u);
    for (Int z = w.level_lo[level]; z <= w.level_hi[level]; ++z) {
        Rational zr{z};
        for (std::size_t t = 0; t < u; ++t)
            next[t] = vec[t].is_zero() ? sums[t] : sums[t] + zr * vec[t];
        walk(w, level + 1, next, out);
    }
}

}  // namespace

EnumerationResult enumerate_modular_invariants(const ModularData& md,
                                               const Rational& bound_multiplier,
                                               unsigned jobs) {
    const std::size_t n = md.rank;
    if (bound_multiplier.sign() <= 0)
        throw std::invalid_argument("bound multiplier must be positive");
    if (jobs == 0) jobs = 1;

    // Reject degenerate braiding before doing anything else.
    if (field_rank(n, md.s_entries) < n)
        throw DegenerateBraidingError("S matrix is singular: braiding is degenerate");

    CommutantSystem cs = solve_commutant(md);

    // Entry bounds ceil(mult * d_i d_j) from the exact quantum dimensions.
    std::vector<CyclotomicNumber> d = exact_quantum_dimensions(md);
    KKClass bound(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int b = exact_ceil(bound_multiplier * cyc_mul(d[i], d[j]));
            bound.at(i, j) = b;
            bound.at(j, i) = b;
        }

    EnumerationResult result;
    result.commutant_dimension = cs.kernel.size();
    result.entry_bound = bound;
    result.bound_multiplier = bound_multiplier;
    if (cs.kernel.empty()) return result;

    const std::size_t u = cs.positions.size();
    WalkContext w;
    w.md = &md;
    w.cs = &cs;
    w.levels = cs.kernel.size();
    w.window_lo.resize(u);
    w.window_hi.resize(u);
    for (std::size_t t = 0; t < u; ++t) {
        auto [i, j] = cs.positions[t];
        bool vacuum = (i == 0 && j == 0);
        w.window_lo[t] = vacuum ? Rational(1) : Rational(0);
        w.window_hi[t] = vacuum ? Rational(1) : Rational(bound.at(i, j));
    }
    for (std::size_t r = 0; r < w.levels; ++r) {
        std::size_t f = cs.free_cols[r];
        w.level_lo.push_back(w.window_lo[f].ceil());
        w.level_hi.push_back(w.window_hi[f].floor());
    }
    // suffix min/max of the remaining contribution per position
    w.minrem.assign(w.levels + 1, std::vector<Rational>(u));
    w.maxrem.assign(w.levels + 1, std::vector<Rational>(u));
    for (std::size_t r = w.levels; r-- > 0;) {
        for (std::size_t t = 0; t < u; ++t) {
            Rational a = Rational(w.level_lo[r]) * cs.kernel[r][t];
            Rational b = Rational(w.level_hi[r]) * cs.kernel[r][t];
            w.minrem[r][t] = w.minrem[r + 1][t] + std::min(a, b);
            w.maxrem[r][t] = w.maxrem[r + 1][t] + std::max(a, b);
        }
    }

    std::vector<ModularInvariant> found;
    if (jobs == 1 || w.levels == 0 || w.level_hi[0] < w.level_lo[0]) {
        std::vector<Rational> sums(u);
        walk(w, 0, sums, found);
    } else {
        // split the first level's values round-robin; the result set is the
        // disjoint union, so the merged, sorted output is jobs-independent
        std::vector<std::vector<ModularInvariant>> parts(jobs);
        std::vector<std::thread> threads;
        for (unsigned th = 0; th < jobs; ++th) {
            threads.emplace_back([&, th]() {
                std::vector<Rational> sums(u);
                std::vector<Rational> next(u);
                unsigned slot = 0;
                for (Int z = w.level_lo[0]; z <= w.level_hi[0]; ++z, ++slot) {
                    if (slot % jobs != th) continue;
                    Rational zr{z};
                    for (std::size_t t = 0; t < u; ++t)
                        next[t] = cs.kernel[0][t].is_zero() ? sums[t]
                                                            : sums[t] + zr * cs.kernel[0][t];
                    walk(w, 1, next, parts[th]);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& p : parts)
            for (auto& z : p) found.push_back(std::move(z));
    }

    std::sort(found.begin(), found.end(), [](const ModularInvariant& a, const ModularInvariant& b) {
        return lex_less(a.matrix, b.matrix);
    });
    result.invariants = std::move(found);
    return result;
}

}  // namespace kkfusion
