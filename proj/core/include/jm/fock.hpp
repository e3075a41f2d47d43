#pragma once

#include <map>
#include <vector>

#include "jm/params.hpp"
#include "jm/partition.hpp"
#include "jm/specialization.hpp"

namespace jm {

template <class S>
using ParamsFor = BasicParams<typename scalar_traits<S>::real_type>;

// Sparse polynomial Σ c_μ ρ_μ in the power-sum variables; zero coefficients are never stored.
template <class S>
class FockVector {
public:
    using Map = std::map<Partition, S>;

    FockVector() = default;
    static FockVector vacuum() { return monomial(Partition{}, scalar_traits<S>::from_int(1)); }
    static FockVector monomial(const Partition& mu, const S& c) {
        FockVector v;
        v.add(mu, c);
        return v;
    }

    const Map& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    S coeff(const Partition& mu) const {
        auto it = entries_.find(mu);
        return it == entries_.end() ? scalar_traits<S>::from_int(0) : it->second;
    }
    // -1 for the zero vector.
    int max_degree() const {
        int best = -1;
        for (const auto& [mu, c] : entries_) best = std::max(best, mu.size());
        return best;
    }

    void add(const Partition& mu, const S& c) {
        if (scalar_traits<S>::is_zero(c)) return;
        auto [it, inserted] = entries_.emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (scalar_traits<S>::is_zero(it->second)) entries_.erase(it);
        }
    }
    FockVector& operator+=(const FockVector& o) {
        for (const auto& [mu, c] : o.entries_) add(mu, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [mu, c] : o.entries_) add(mu, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    FockVector scaled(const S& c) const {
        FockVector out;
        if (scalar_traits<S>::is_zero(c)) return out;
        for (const auto& [mu, v] : entries_) out.add(mu, v * c);
        return out;
    }
    FockVector degree_part(int d) const {
        FockVector out;
        for (const auto& [mu, c] : entries_) {
            if (mu.size() == d) out.entries_.emplace(mu, c);
        }
        return out;
    }
    FockVector truncated(int D) const {
        FockVector out;
        for (const auto& [mu, c] : entries_) {
            if (mu.size() <= D) out.entries_.emplace(mu, c);
        }
        return out;
    }

    friend bool operator==(const FockVector& a, const FockVector& b) { return a.entries_ == b.entries_; }

private:
    Map entries_;
};

// Auxiliary index j -> Fock component; layer 0 carries the physical vector.
template <class S>
using AuxFockVector = std::map<int, FockVector<S>>;

// ||ρ_μ||^2 = Π_k (hbar k)^{d_k} d_k!.
template <class R>
R monomial_norm_squared(const Partition& mu, const R& hbar);

// Σ_μ conj(a_μ) b_μ ||ρ_μ||^2, antilinear in the first argument.
template <class S>
S inner_product(const FockVector<S>& a, const FockVector<S>& b, const typename scalar_traits<S>::real_type& hbar);

// Multiplication by ρ_k.
template <class S>
FockVector<S> apply_create(int k, const FockVector<S>& x);
// hbar k ∂/∂ρ_k.
template <class S>
FockVector<S> apply_annihilate(int k, const FockVector<S>& x, const typename scalar_traits<S>::real_type& hbar);

// exp((1/hbar) Σ conj(V_k) ρ_k / k) restricted to degrees <= D.
template <class S>
FockVector<S> coherent_state(const BasicSpecialization<S>& v, const typename scalar_traits<S>::real_type& hbar, int D);
// The degree-d component of the coherent state.
template <class S>
FockVector<S> coherent_state_degree(const BasicSpecialization<S>& v, const typename scalar_traits<S>::real_type& hbar, int d);

// One multiplication by the Lax matrix with entries ρ̂_{j'-j} + ebar j δ(j - j'), layers 0..Jmax kept.
template <class S>
AuxFockVector<S> apply_lax(const AuxFockVector<S>& z, const ParamsFor<S>& params, int Jmax);

// T̂_ℓ x read off layer 0 after ℓ Lax multiplications. Exact when Jmax >= max degree of x;
// in exact arithmetic a smaller Jmax throws TruncationError.
template <class S>
FockVector<S> apply_T(int ell, const FockVector<S>& x, const ParamsFor<S>& params, int Jmax);

// Σ_{j1,j2} ρ̂_{j1} ρ̂_{j2-j1} ρ̂_{-j2} + ebar Σ_j j ρ̂_j ρ̂_{-j}, written out term by term.
template <class S>
FockVector<S> apply_cubic(const FockVector<S>& x, const ParamsFor<S>& params);

template <class S>
struct OperatorMoment {
    S value;
    bool truncated = false;  // the degree cutoff did not clear the reach bound
    int jmax = 0;
    int degree_cutoff = 0;
    int reach = 0;
};

// Fock degree that an expansion of T̂_{ℓ_1}⋯T̂_{ℓ_n} can reach before returning: H Σ_a floor(ℓ_a / 2).
int operator_reach(const std::vector<int>& lengths, int K);

// <Υ_in, T̂_{ℓ_1}⋯T̂_{ℓ_n} Υ_out> / <Υ_in, Υ_out>. The annihilators are moved through Υ_out
// (ρ̂_{-k} -> ρ̂_{-k} + conj(V^out_k)), the product is applied to 1 with polynomials cut at degree D,
// and the result is evaluated at ρ_k = V^in_k. Exact once D >= operator_reach.
template <class S>
OperatorMoment<S> joint_moments_operator(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                                         const BasicSpecialization<S>& v_in, const ParamsFor<S>& params, int D);

// The same ratio with both coherent states cut at degree D: the moment conditioned on |λ| <= D.
template <class S>
S joint_moments_truncated(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                          const BasicSpecialization<S>& v_in, const ParamsFor<S>& params, int D);

// The same ratio with the degree-d kernels: the moment conditioned on |λ| = d.
template <class S>
S conditioned_moments(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                      const BasicSpecialization<S>& v_in, const ParamsFor<S>& params, int d);

// d (d-1) ⋯ (d-η+1) hbar^η.
template <class R>
R depoissonization_factor(int eta, int d, const R& hbar);

}  // namespace jm
