#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jm/bipoly.hpp"
#include "jm/partition.hpp"
#include "jm/specialization.hpp"

namespace jm {

// Height sequence j_0, ..., j_l with j_0 = j_l = 0 and all heights nonnegative.
struct SlidingPath {
    std::vector<int> heights;
    int length() const { return static_cast<int>(heights.size()) - 1; }
    int step_degree(int i) const { return heights[i + 1] - heights[i]; }
    friend bool operator==(const SlidingPath& a, const SlidingPath& b) { return a.heights == b.heights; }
};

// Step i of a site goes from heights[i] to heights[i + 1]; both indices 0-based.
struct StepRef {
    int site = 0;
    int step = 0;
    friend bool operator==(const StepRef& a, const StepRef& b) { return a.site == b.site && a.step == b.step; }
};

// A pairing joins a down step of size k (first) with a later up step of size k (second).
struct RibbonPath {
    std::vector<SlidingPath> sites;
    std::vector<std::pair<StepRef, StepRef>> pairings;
};

// Block sizes (n_1, ..., n_N) grouping consecutive sites; Σ n_j = number of sites.
using Decoration = std::vector<int>;

// All sliding paths of length ell with |jump| <= K, ordered lexicographically by heights.
std::vector<SlidingPath> enumerate_sliding_paths(int ell, int K);

// Throws DomainError if the path violates the ribbon-path invariants.
void validate_ribbon_path(const RibbonPath& path);

template <class S>
struct PathWeight {
    S value;     // Π size(p) Π height(slide) Π conj(V^out) Π V^in
    int q = 0;   // number of pairings (power of hbar)
    int m = 0;   // number of slides (power of ebar)
};

template <class S>
PathWeight<S> path_weight(const RibbonPath& path, const BasicSpecialization<S>& v_out, const BasicSpecialization<S>& v_in);

// (mu_minus, mu_plus): sizes of the unpaired down and up jumps.
std::pair<Partition, Partition> unpaired_jump_profiles(const RibbonPath& path);

bool is_connected(const RibbonPath& path);
bool is_connected_decorated(const RibbonPath& path, const Decoration& nu);

// Heights never exceed K * ceil(Σ l / 2) for support bound K.
int height_bound(const std::vector<int>& lengths, int K);

struct RibbonOptions {
    int threads = 1;
};

// Σ over ribbon paths of weight * hbar^q * ebar^m (moments) and over connected ones (cumulants).
template <class S>
BiPolynomial<S> Y_sum(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                      const BasicSpecialization<S>& v_in, const RibbonOptions& opts = {});
template <class S>
BiPolynomial<S> W_sum(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                      const BasicSpecialization<S>& v_in, const RibbonOptions& opts = {});

template <class S>
BiPolynomial<S> moments_poly(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                             const BasicSpecialization<S>& v_in, const RibbonOptions& opts = {}) {
    return Y_sum(lengths, v_out, v_in, opts);
}
template <class S>
BiPolynomial<S> cumulants_poly(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                               const BasicSpecialization<S>& v_in, const RibbonOptions& opts = {}) {
    return W_sum(lengths, v_out, v_in, opts);
}

// Sum over ribbon paths on the given sites that are connected along the decoration nu.
template <class S>
BiPolynomial<S> W_sum_decorated(const std::vector<int>& lengths, const Decoration& nu,
                                const BasicSpecialization<S>& v_out, const BasicSpecialization<S>& v_in,
                                const RibbonOptions& opts = {});

// Single-site sum without pairings: Σ_m W_{1,0,m}(l) ebar^m, stored at q = 0.
template <class S>
BiPolynomial<S> single_site_unpaired(int ell, const BasicSpecialization<S>& v_out, const BasicSpecialization<S>& v_in);

// Joint cumulant of O_{p_1}, ..., O_{p_N} by counting decorated connected ribbon paths.
template <class S>
BiPolynomial<S> decorated_cumulants_poly(const std::vector<int>& p, const BasicSpecialization<S>& v_out,
                                         const BasicSpecialization<S>& v_in, const RibbonOptions& opts = {});

// Same quantity assembled from plain cumulants of T's by the products-of-cumulants formula.
template <class S>
BiPolynomial<S> decorated_cumulants_poly_from_plain(const std::vector<int>& p, const BasicSpecialization<S>& v_out,
                                                    const BasicSpecialization<S>& v_in);

// Counts of connected ribbon paths with prescribed unpaired jump profiles.
BiPolynomial<Rational> C_count(const std::vector<int>& lengths, const Partition& mu_out, const Partition& mu_in);

// Brute-force oracle: lists every ribbon path with heights <= height bound and sums the weights.
// Restricted to connected paths along nu when connected_along is non-null.
template <class S>
BiPolynomial<S> enumerate_paths_sum(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                                    const BasicSpecialization<S>& v_in, const Decoration* connected_along);

// Calls visit for every ribbon path (any pairing) with nonzero weight under (v_out, v_in).
template <class S>
void for_each_ribbon_path(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                          const BasicSpecialization<S>& v_in, const std::function<void(const RibbonPath&)>& visit);

// Set partitions of {0..n-1} as block-label vectors (restricted growth strings).
std::vector<std::vector<int>> set_partitions(int n);

// Classical cumulants from moments: κ(X_0..X_{n-1}) = Σ_π (-1)^{|π|-1} (|π|-1)! Π_b E[Π_{i∈b} X_i].
template <class S>
BiPolynomial<S> cumulant_from_moments(int n, const std::function<BiPolynomial<S>(const std::vector<int>&)>& moment_of_subset);
// Moments from cumulants: E[X_0 ... X_{n-1}] = Σ_π Π_b κ(X_b).
template <class S>
BiPolynomial<S> moment_from_cumulants(int n, const std::function<BiPolynomial<S>(const std::vector<int>&)>& cumulant_of_subset);

}  // namespace jm
