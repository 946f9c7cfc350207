#pragma once

#include "kkfusion/rational.hpp"

#include <cstddef>
#include <vector>

namespace kkfusion {

// Square integer matrix: the matrix model of KK(K_A, K_A) = M_n(Z) under the
// universal-coefficient identification, and the carrier for modular
// invariants Z. Plain composition lives in matmul(); the Kasparov product
// with its order reversal is kasparov_product() in kk.hpp.
class KKClass {
public:
    KKClass() : n_(0) {}
    explicit KKClass(std::size_t n) : n_(n), a_(n * n) {}
    KKClass(std::size_t n, std::vector<Int> entries);

    static KKClass identity(std::size_t n);
    static KKClass matrix_unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t dim() const { return n_; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::vector<Int>& entries() const { return a_; }

    bool is_identity() const;

    KKClass& operator+=(const KKClass& o);
    KKClass& operator-=(const KKClass& o);
    friend KKClass operator+(KKClass a, const KKClass& b) { return a += b; }
    friend KKClass operator-(KKClass a, const KKClass& b) { return a -= b; }
    friend KKClass operator*(const Int& c, KKClass m);
    friend bool operator==(const KKClass& a, const KKClass& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const KKClass& a, const KKClass& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Int> a_;  // row-major
};

/// Plain matrix composition a.b (row times column).
KKClass matmul(const KKClass& a, const KKClass& b);

/// Lexicographic comparison of flattened entries; the canonical output order
/// for classification results.
bool lex_less(const KKClass& a, const KKClass& b);

}  // namespace kkfusion
