#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "jm/scalar.hpp"

namespace jm {

// Sparse polynomial Σ c_{q,m} hbar^q ebar^m with no stored zero coefficients.
template <class S>
class BiPolynomial {
public:
    using Key = std::pair<int, int>;  // (q, m): hbar exponent, ebar exponent

    BiPolynomial() = default;
    static BiPolynomial constant(const S& c) {
        BiPolynomial p;
        p.add(0, 0, c);
        return p;
    }
    static BiPolynomial monomial(int q, int m, const S& c) {
        BiPolynomial p;
        p.add(q, m, c);
        return p;
    }

    const std::map<Key, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    S coeff(int q, int m) const {
        auto it = terms_.find({q, m});
        return it == terms_.end() ? scalar_traits<S>::from_int(0) : it->second;
    }
    int min_q() const {
        int best = 1 << 30;
        for (const auto& [key, c] : terms_) best = std::min(best, key.first);
        return best;
    }
    int max_q() const {
        int best = -1;
        for (const auto& [key, c] : terms_) best = std::max(best, key.first);
        return best;
    }
    int max_m() const {
        int best = -1;
        for (const auto& [key, c] : terms_) best = std::max(best, key.second);
        return best;
    }

    void add(int q, int m, const S& c) {
        if (scalar_traits<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(Key{q, m}, c);
        if (!inserted) {
            it->second += c;
            if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    BiPolynomial& operator+=(const BiPolynomial& o) {
        for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
        return *this;
    }
    BiPolynomial& operator-=(const BiPolynomial& o) {
        for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
        return *this;
    }
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
        BiPolynomial out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
        return out;
    }
    BiPolynomial scaled(const S& c) const {
        BiPolynomial out;
        for (const auto& [key, v] : terms_) out.add(key.first, key.second, v * c);
        return out;
    }
    // Multiplies by c * hbar^dq * ebar^dm.
    BiPolynomial shifted(int dq, int dm, const S& c) const {
        BiPolynomial out;
        for (const auto& [key, v] : terms_) out.add(key.first + dq, key.second + dm, v * c);
        return out;
    }

    // Keeps only the terms with the given hbar exponent.
    BiPolynomial hbar_slice(int q) const {
        BiPolynomial out;
        for (const auto& [key, v] : terms_) {
            if (key.first == q) out.add(key.first, key.second, v);
        }
        return out;
    }

    // Horner-free evaluation; exponents stay small in practice.
    template <class T>
    S evaluate(const T& hbar, const T& ebar) const {
        S total = scalar_traits<S>::from_int(0);
        for (const auto& [key, v] : terms_) {
            S term = v;
            for (int i = 0; i < key.first; ++i) term *= S(hbar);
            for (int i = 0; i < key.second; ++i) term *= S(ebar);
            total += term;
        }
        return total;
    }

    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.terms_ == b.terms_; }

private:
    std::map<Key, S> terms_;
};

}  // namespace jm
