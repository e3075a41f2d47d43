#pragma once

#include <map>
#include <vector>

#include "jm/params.hpp"
#include "jm/partition.hpp"

namespace jm {

// Local minima and maxima of a slope ±1 profile, both ascending and strictly interlacing:
// minima[0] < maxima[0] < minima[1] < ... < minima.back().
template <class R>
struct InterlacingProfile {
    std::vector<R> minima;
    std::vector<R> maxima;
};

// Throws ConsistencyError when counts or interlacing fail.
template <class R>
void check_interlacing(const InterlacingProfile<R>& profile);

// Minima at addable-cell contents, maxima at removable-cell contents shifted by ebar.
template <class R>
InterlacingProfile<R> profile_of(const Partition& lambda, const BasicParams<R>& params);

// f(c) = Σ|c - x_i| - Σ|c - y_j|, the piecewise-linear profile.
template <class R>
R profile_value(const InterlacingProfile<R>& profile, const R& c);

// ∫ (f(c) - |c|) dc computed piece by piece from the extrema.
template <class R>
R geometric_area(const InterlacingProfile<R>& profile);

// Returns 2 hbar |λ| after confirming it against the geometric area of the profile.
template <class R>
R profile_area(const Partition& lambda, const BasicParams<R>& params);

// T_0..T_L: coefficients of u^{-l-1} in Π(u - max)/Π(u - min), via power sums.
template <class R>
std::vector<R> transition_moments(const InterlacingProfile<R>& profile, int L);

// T_0..T_L from the box product Π (u-c)(u-c-ebar)/((u-c-eps2)(u-c-eps1)) by series division.
template <class R>
std::vector<R> transition_moments_content_product(const Partition& lambda, const BasicParams<R>& params, int L);

// O_0..O_P with O_p = Σ min^p - Σ max^p (so O_0 = 1).
template <class R>
std::vector<R> linear_statistics(const InterlacingProfile<R>& profile, int P);

// Moment transforms between T (with t[0] = 1) and O, truncated at the input length.
// Entry 0 of an O sequence is the total mass 1.
template <class F>
std::vector<F> kmk_O_from_T(const std::vector<F>& t);
template <class F>
std::vector<F> kmk_T_from_O(const std::vector<F>& o);

// O_p as an integer polynomial in commuting variables T_1, T_2, ...
// Keys are nonincreasing index lists; the empty key never appears.
using KmkPolynomial = std::map<std::vector<int>, long long>;
KmkPolynomial kmk_polynomial(int p);

}  // namespace jm
