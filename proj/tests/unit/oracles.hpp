#pragma once

// Independent reference computations used as test oracles. Nothing here calls into the library
// routines being checked; the inputs and outputs use plain standard types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

// Nonincreasing positive sequences summing to n, generated by recursion on the largest part and
// then sorted into reverse lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Number of standard Young tableaux of shape lambda, by the hook length formula.
inline double hook_dimension(const std::vector<int>& lambda) {
    int n = 0;
    for (int x : lambda) n += x;
    std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
    for (int x : lambda)
        for (int j = 0; j < x; ++j) ++conj[j];
    double value = 1.0;
    for (int k = 2; k <= n; ++k) value *= k;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int hook = (lambda[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
            value /= hook;
        }
    }
    return value;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline std::int64_t catalan(int m) {
    std::int64_t c = 1;
    for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// Motzkin numbers from the three-term recurrence (n + 2) M_n = (2n + 1) M_{n-1} + 3(n - 1) M_{n-2}.
inline std::int64_t motzkin(int n) {
    std::vector<std::int64_t> m{1, 1};
    for (int k = 2; k <= n; ++k) m.push_back(((2 * k + 1) * m[k - 1] + 3 * (k - 1) * m[k - 2]) / (k + 2));
    return m[static_cast<std::size_t>(n)];
}

// Central binomial coefficient C(2m, m).
inline double central_binomial(int m) {
    double c = 1.0;
    for (int i = 1; i <= m; ++i) c = c * (m + i) / i;
    return c;
}

// Semicircle moments on [-2, 2]: Catalan numbers at even orders.
inline double semicircle_moment(int l) { return l % 2 ? 0.0 : static_cast<double>(catalan(l / 2)); }

}  // namespace oracle
