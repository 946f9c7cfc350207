#include "kkfusion/kk_class.hpp"

#include <stdexcept>

namespace kkfusion {

KKClass::KKClass(std::size_t n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) throw std::invalid_argument("matrix entry count does not match dimension");
}

KKClass KKClass::identity(std::size_t n) {
    KKClass m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

KKClass KKClass::matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    KKClass m(n);
    m.at(i, j) = 1;
    return m;
}

bool KKClass::is_identity() const {
    return *this == identity(n_);
}

KKClass& KKClass::operator+=(const KKClass& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

KKClass& KKClass::operator-=(const KKClass& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

KKClass operator*(const Int& c, KKClass m) {
    for (auto& x : m.a_) x *= c;
    return m;
}

KKClass matmul(const KKClass& a, const KKClass& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.dim();
    KKClass out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

bool lex_less(const KKClass& a, const KKClass& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const auto& x = a.entries();
    const auto& y = b.entries();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace kkfusion
