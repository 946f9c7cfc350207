#include "kkfusion/fusion_ring.hpp"

#include <set>
#include <stdexcept>

namespace kkfusion {

KRingElement KRingElement::basis(std::size_t rank, std::size_t i) {
    if (i >= rank) throw std::out_of_range("basis index out of range");
    KRingElement e(rank);
    e[i] = 1;
    return e;
}

KRingElement& KRingElement::operator+=(const KRingElement& o) {
    if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

KRingElement& KRingElement::operator-=(const KRingElement& o) {
    if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

KRingElement operator*(const Int& c, KRingElement x) {
    for (auto& v : x.coords_) v *= c;
    return x;
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) throw std::invalid_argument("fusion ring needs at least one sector");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("duplicate sector labels");
}

}  // namespace

FusionRing::FusionRing(std::vector<std::string> labels, const std::vector<FusionEntry>& sparse)
    : rank_(labels.size()), labels_(std::move(labels)), tensor_(rank_ * rank_ * rank_) {
    check_labels(labels_);
    for (const auto& e : sparse) {
        if (e.i >= rank_ || e.j >= rank_ || e.k >= rank_)
            throw std::invalid_argument("fusion tensor index out of range");
        if (e.value < 0) throw std::invalid_argument("fusion multiplicities must be nonnegative");
        tensor_[(e.i * rank_ + e.j) * rank_ + e.k] = e.value;
    }
}

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<Int> dense_tensor)
    : rank_(labels.size()), labels_(std::move(labels)), tensor_(std::move(dense_tensor)) {
    check_labels(labels_);
    if (tensor_.size() != rank_ * rank_ * rank_)
        throw std::invalid_argument("fusion tensor size does not match rank");
    for (const auto& v : tensor_)
        if (v < 0) throw std::invalid_argument("fusion multiplicities must be nonnegative");
}

std::optional<std::size_t> FusionRing::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::vector<FusionEntry> FusionRing::sparse() const {
    std::vector<FusionEntry> out;
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            for (std::size_t k = 0; k < rank_; ++k) {
                const Int& v = coeff(i, j, k);
                if (v != 0) out.push_back({i, j, k, v});
            }
    return out;
}

VerificationReport verify_fusion_ring(const FusionRing& ring) {
    const std::size_t n = ring.rank();
    VerificationReport rep;

    {
        CheckResult c{"unit_law", true, ""};
        for (std::size_t j = 0; j < n && c.passed; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Int expect = (j == k) ? 1 : 0;
                if (ring.coeff(FusionRing::vacuum, j, k) != expect) {
                    c.passed = false;
                    c.witness = "N_{0," + std::to_string(j) + "}^" + std::to_string(k) + " = " +
                                ring.coeff(0, j, k).get_str();
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"commutativity", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n && c.passed; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (ring.coeff(i, j, k) != ring.coeff(j, i, k)) {
                        c.passed = false;
                        c.witness = "(i,j,k) = (" + std::to_string(i) + "," + std::to_string(j) +
                                    "," + std::to_string(k) + ")";
                        break;
                    }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"associativity", true, ""};
        for (std::size_t i = 0; i < n && c.passed; ++i)
            for (std::size_t j = 0; j < n && c.passed; ++j)
                for (std::size_t k = 0; k < n && c.passed; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        Int lhs = 0, rhs = 0;
                        for (std::size_t m = 0; m < n; ++m) {
                            lhs += ring.coeff(i, j, m) * ring.coeff(m, k, l);
                            rhs += ring.coeff(j, k, m) * ring.coeff(i, m, l);
                        }
                        if (lhs != rhs) {
                            c.passed = false;
                            c.witness = "(i,j,k,l) = (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + "," +
                                        std::to_string(l) + ")";
                            break;
                        }
                    }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"duality", true, ""};
        std::vector<std::size_t> dual_of(n, n);
        for (std::size_t i = 0; i < n && c.passed; ++i) {
            std::size_t count = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const Int& v = ring.coeff(i, j, FusionRing::vacuum);
                if (v == 0) continue;
                if (v != 1) {
                    c.passed = false;
                    c.witness = "N_{" + std::to_string(i) + "," + std::to_string(j) +
                                "}^0 = " + v.get_str();
                    break;
                }
                dual_of[i] = j;
                ++count;
            }
            if (c.passed && count != 1) {
                c.passed = false;
                c.witness = "sector " + std::to_string(i) + " has " + std::to_string(count) +
                            " duals";
            }
        }
        if (c.passed) {
            for (std::size_t i = 0; i < n; ++i)
                if (dual_of[dual_of[i]] != i) {
                    c.passed = false;
                    c.witness = "dual not involutive at sector " + std::to_string(i);
                    break;
                }
        }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

KKClass fusion_matrix(const FusionRing& ring, std::size_t sector) {
    const std::size_t n = ring.rank();
    if (sector >= n) throw std::out_of_range("sector index out of range");
    KKClass m(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) m.at(k, j) = ring.coeff(sector, j, k);
    return m;
}

KRingElement ring_multiply(const FusionRing& ring, const KRingElement& x,
                           const KRingElement& y) {
    const std::size_t n = ring.rank();
    if (x.rank() != n || y.rank() != n) throw std::invalid_argument("rank mismatch");
    KRingElement out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            Int xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Int& nijk = ring.coeff(i, j, k);
                if (nijk != 0) out[k] += xy * nijk;
            }
        }
    }
    return out;
}

std::size_t dual(const FusionRing& ring, std::size_t sector) {
    const std::size_t n = ring.rank();
    if (sector >= n) throw std::out_of_range("sector index out of range");
    for (std::size_t j = 0; j < n; ++j)
        if (ring.coeff(sector, j, FusionRing::vacuum) == 1) return j;
    throw std::logic_error("sector has no dual (ring not verified?)");
}

std::vector<RealInterval> quantum_dimensions(const FusionRing& ring) {
    const std::size_t n = ring.rank();

    // A = I + sum_i M_i: strictly positive for a verified fusion ring (every
    // sector appears in some product), so power iteration converges to the
    // common Perron vector of the commuting family {M_i}.
    std::vector<Int> A(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            Int sum = (k == j) ? 1 : 0;
            for (std::size_t i = 0; i < n; ++i) sum += ring.coeff(i, j, k);
            A[k * n + j] = sum;
        }

    std::vector<Rational> x(n, Rational(1));
    const Rational grid(Int(1), Int(1) << 96);
    const Rational target(Int(1), Int(1) << 48);

    auto intervals_for = [&](const std::vector<Rational>& v) {
        std::vector<RealInterval> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            RealInterval iv;
            bool first = true;
            for (std::size_t k = 0; k < n; ++k) {
                Rational num(0);
                for (std::size_t j = 0; j < n; ++j) {
                    const Int& m = ring.coeff(i, j, k);
                    if (m != 0) num += Rational(m) * v[j];
                }
                Rational ratio = num / v[k];
                if (first || ratio < iv.lo) iv.lo = ratio;
                if (first || ratio > iv.hi) iv.hi = ratio;
                first = false;
            }
            out[i] = iv;
        }
        return out;
    };

    std::vector<RealInterval> best = intervals_for(x);
    for (unsigned iter = 0; iter < 512; ++iter) {
        std::vector<Rational> y(n);
        Rational maxv(0);
        for (std::size_t k = 0; k < n; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j) {
                if (A[k * n + j] != 0) acc += Rational(A[k * n + j]) * x[j];
            }
            y[k] = acc;
            if (acc > maxv) maxv = acc;
        }
        // normalize and snap to a dyadic grid so coefficient sizes stay bounded
        for (std::size_t k = 0; k < n; ++k) {
            Rational scaled = y[k] / maxv;
            Rational snapped = Rational((scaled / grid).floor()) * grid;
            y[k] = (snapped.sign() > 0) ? snapped : grid;
        }
        x = std::move(y);
        if (iter % 8 == 7 || iter + 1 == 512) {
            std::vector<RealInterval> cur = intervals_for(x);
            Rational worst(0);
            for (const auto& iv : cur)
                if (iv.width() > worst) worst = iv.width();
            best = std::move(cur);
            if (worst < target) break;
        }
    }
    return best;
}

}  // namespace kkfusion
