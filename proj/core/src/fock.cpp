#include "jm/fock.hpp"

#include <algorithm>
#include <numeric>

#include "jm/errors.hpp"
#include "jm/ribbon.hpp"

namespace jm {

template <class R>
R monomial_norm_squared(const Partition& mu, const R& hbar) {
    R out = 1;
    int i = 0;
    while (i < mu.length()) {
        int k = mu[static_cast<std::size_t>(i)];
        int m = 0;
        while (i < mu.length() && mu[static_cast<std::size_t>(i)] == k) {
            ++m;
            ++i;
            out *= hbar * k * m;  // builds (hbar k)^m m!
        }
    }
    return out;
}

template <class S>
S inner_product(const FockVector<S>& a, const FockVector<S>& b, const typename scalar_traits<S>::real_type& hbar) {
    using T = scalar_traits<S>;
    S total = T::from_int(0);
    const auto& small = a.size() <= b.size() ? a.entries() : b.entries();
    for (const auto& [mu, c] : small) {
        S ca = a.coeff(mu);
        S cb = b.coeff(mu);
        if (T::is_zero(ca) || T::is_zero(cb)) continue;
        total += T::conjugate(ca) * cb * T::from_real(monomial_norm_squared(mu, hbar));
    }
    return total;
}

template <class S>
FockVector<S> apply_create(int k, const FockVector<S>& x) {
    if (k < 1) throw DomainError("creation index must be positive");
    FockVector<S> out;
    for (const auto& [mu, c] : x.entries()) out.add(mu.with_part(k), c);
    return out;
}

template <class S>
FockVector<S> apply_annihilate(int k, const FockVector<S>& x, const typename scalar_traits<S>::real_type& hbar) {
    using T = scalar_traits<S>;
    if (k < 1) throw DomainError("annihilation index must be positive");
    FockVector<S> out;
    for (const auto& [mu, c] : x.entries()) {
        int m = mu.multiplicity(k);
        if (m == 0) continue;
        typename T::real_type factor = hbar * k * m;
        out.add(mu.without_part(k), c * T::from_real(factor));
    }
    return out;
}

namespace {

template <class S>
void coherent_rec(const std::vector<std::pair<int, S>>& gens, std::size_t index, int budget, int exact_degree,
                  std::vector<int>& parts, const S& coef, FockVector<S>& out) {
    using T = scalar_traits<S>;
    if (index == gens.size()) {
        int size = std::accumulate(parts.begin(), parts.end(), 0);
        if (exact_degree < 0 || size == exact_degree) out.add(Partition(parts), coef);
        return;
    }
    const auto& [k, a] = gens[index];
    S c = coef;
    std::size_t base = parts.size();
    for (int m = 0; m * k <= budget; ++m) {
        if (m > 0) {
            c = c * a / T::from_int(m);
            parts.push_back(k);
        }
        coherent_rec(gens, index + 1, budget - m * k, exact_degree, parts, c, out);
    }
    parts.resize(base);
}

template <class S>
FockVector<S> coherent_impl(const BasicSpecialization<S>& v, const typename scalar_traits<S>::real_type& hbar, int D,
                            bool exact_degree) {
    using T = scalar_traits<S>;
    if (D < 0) throw DomainError("degree cutoff must be nonnegative");
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    std::vector<std::pair<int, S>> gens;
    // Largest parts first so that the collected parts are already weakly decreasing.
    for (auto it = v.coeffs().rbegin(); it != v.coeffs().rend(); ++it) {
        typename T::real_type scale = hbar * it->first;
        gens.emplace_back(it->first, T::conjugate(it->second) / T::from_real(scale));
    }
    FockVector<S> out;
    std::vector<int> parts;
    coherent_rec(gens, 0, D, exact_degree ? D : -1, parts, T::from_int(1), out);
    return out;
}

// Lax multiplication with optional displacement of the annihilators by conj(V^out_k)
// and optional cut of the polynomial degree.
template <class S>
AuxFockVector<S> lax_step(const AuxFockVector<S>& z, const ParamsFor<S>& params, int Jmax,
                          const BasicSpecialization<S>* displacement, int degree_cap) {
    using T = scalar_traits<S>;
    AuxFockVector<S> out;
    auto accumulate_into = [&](int j, FockVector<S> piece) {
        if (degree_cap >= 0) piece = piece.truncated(degree_cap);
        if (piece.is_zero()) return;
        auto& slot = out[j];
        slot += piece;
        if (slot.is_zero()) out.erase(j);
    };
    S ebar = T::from_real(params.ebar());
    for (const auto& [jp, vec] : z) {
        if (jp > Jmax) continue;
        if (jp > 0 && !T::is_zero(ebar)) accumulate_into(jp, vec.scaled(ebar * T::from_int(jp)));
        for (int j = 0; j < jp; ++j) accumulate_into(j, apply_create(jp - j, vec));
        for (int j = jp + 1; j <= Jmax; ++j) {
            int k = j - jp;
            FockVector<S> piece = apply_annihilate(k, vec, params.hbar());
            if (displacement && displacement->contains(k)) piece += vec.scaled(T::conjugate(displacement->at(k)));
            accumulate_into(j, std::move(piece));
        }
    }
    return out;
}

template <class S>
FockVector<S> apply_T_impl(int ell, const FockVector<S>& x, const ParamsFor<S>& params, int Jmax,
                           const BasicSpecialization<S>* displacement, int degree_cap) {
    if (ell < 0) throw DomainError("operator index must be nonnegative");
    if (Jmax < 0) throw DomainError("auxiliary cutoff must be nonnegative");
    if (ell == 0) return x;
    AuxFockVector<S> z;
    if (!x.is_zero()) z.emplace(0, x);
    for (int t = 0; t < ell && !z.empty(); ++t) z = lax_step(z, params, Jmax, displacement, degree_cap);
    auto it = z.find(0);
    return it == z.end() ? FockVector<S>() : it->second;
}

template <class S>
S evaluate_at(const FockVector<S>& p, const BasicSpecialization<S>& v) {
    using T = scalar_traits<S>;
    S total = T::from_int(0);
    for (const auto& [mu, c] : p.entries()) {
        S term = c;
        for (int k : mu.parts()) {
            term *= v.at(k);
            if (T::is_zero(term)) break;
        }
        total += term;
    }
    return total;
}

template <class S>
S kernel_pairing(const std::vector<int>& lengths, const FockVector<S>& in, const FockVector<S>& out,
                 const ParamsFor<S>& params, int Jmax) {
    using T = scalar_traits<S>;
    FockVector<S> y = out;
    for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) y = apply_T_impl<S>(*it, y, params, Jmax, nullptr, -1);
    S num = inner_product(in, y, params.hbar());
    S den = inner_product(in, out, params.hbar());
    if (T::is_zero(den)) throw DomainError("the truncated kernels are orthogonal; the ratio is undefined");
    return num / den;
}

}  // namespace

template <class S>
FockVector<S> coherent_state(const BasicSpecialization<S>& v, const typename scalar_traits<S>::real_type& hbar, int D) {
    return coherent_impl(v, hbar, D, false);
}

template <class S>
FockVector<S> coherent_state_degree(const BasicSpecialization<S>& v, const typename scalar_traits<S>::real_type& hbar, int d) {
    return coherent_impl(v, hbar, d, true);
}

template <class S>
AuxFockVector<S> apply_lax(const AuxFockVector<S>& z, const ParamsFor<S>& params, int Jmax) {
    if (Jmax < 0) throw DomainError("auxiliary cutoff must be nonnegative");
    return lax_step<S>(z, params, Jmax, nullptr, -1);
}

template <class S>
FockVector<S> apply_T(int ell, const FockVector<S>& x, const ParamsFor<S>& params, int Jmax) {
    if (scalar_traits<S>::exact && ell >= 2 && Jmax < x.max_degree()) {
        throw TruncationError("auxiliary cutoff " + std::to_string(Jmax) + " is below the degree " +
                              std::to_string(x.max_degree()) + " of the input");
    }
    return apply_T_impl<S>(ell, x, params, Jmax, nullptr, -1);
}

template <class S>
FockVector<S> apply_cubic(const FockVector<S>& x, const ParamsFor<S>& params) {
    using T = scalar_traits<S>;
    const auto hbar = params.hbar();
    int d = std::max(0, x.max_degree());
    FockVector<S> out;
    for (int j2 = 1; j2 <= d; ++j2) {
        FockVector<S> a = apply_annihilate(j2, x, hbar);
        if (a.is_zero()) continue;
        for (int j1 = 1; j1 <= d; ++j1) {
            if (j1 == j2) continue;
            FockVector<S> b = j2 > j1 ? apply_create(j2 - j1, a) : apply_annihilate(j1 - j2, a, hbar);
            if (!b.is_zero()) out += apply_create(j1, b);
        }
        S weight = T::from_real(params.ebar()) * T::from_int(j2);
        if (!T::is_zero(weight)) out += apply_create(j2, a).scaled(weight);
    }
    return out;
}

int operator_reach(const std::vector<int>& lengths, int K) {
    int halves = 0;
    for (int l : lengths) halves += l / 2;
    return height_bound(lengths, K) * halves;
}

template <class S>
OperatorMoment<S> joint_moments_operator(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                                         const BasicSpecialization<S>& v_in, const ParamsFor<S>& params, int D) {
    if (D < 0) throw DomainError("degree cutoff must be nonnegative");
    for (int l : lengths) {
        if (l < 0) throw DomainError("operator indices must be nonnegative");
    }
    OperatorMoment<S> result;
    int K = std::max(v_out.support_bound(), v_in.support_bound());
    result.jmax = height_bound(lengths, K);
    result.reach = operator_reach(lengths, K);
    result.degree_cutoff = D;
    result.truncated = D < result.reach;
    FockVector<S> p = FockVector<S>::vacuum();
    for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
        p = apply_T_impl<S>(*it, p, params, result.jmax, &v_out, D);
    }
    result.value = evaluate_at(p, v_in);
    return result;
}

template <class S>
S joint_moments_truncated(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                          const BasicSpecialization<S>& v_in, const ParamsFor<S>& params, int D) {
    FockVector<S> out = coherent_state(v_out, params.hbar(), D);
    FockVector<S> in = coherent_state(v_in, params.hbar(), D);
    return kernel_pairing(lengths, in, out, params, D);
}

template <class S>
S conditioned_moments(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                      const BasicSpecialization<S>& v_in, const ParamsFor<S>& params, int d) {
    FockVector<S> out = coherent_state_degree(v_out, params.hbar(), d);
    FockVector<S> in = coherent_state_degree(v_in, params.hbar(), d);
    return kernel_pairing(lengths, in, out, params, d);
}

template <class R>
R depoissonization_factor(int eta, int d, const R& hbar) {
    if (eta < 0 || d < 0) throw DomainError("depoissonization factor needs eta >= 0 and d >= 0");
    R out = 1;
    for (int i = 0; i < eta; ++i) out *= R(d - i) * hbar;
    return out;
}

template double monomial_norm_squared<double>(const Partition&, const double&);
template Rational monomial_norm_squared<Rational>(const Partition&, const Rational&);
template double depoissonization_factor<double>(int, int, const double&);
template Rational depoissonization_factor<Rational>(int, int, const Rational&);

#define JM_FOCK_INSTANTIATE(S)                                                                                       \
    template S inner_product<S>(const FockVector<S>&, const FockVector<S>&, const scalar_traits<S>::real_type&);    \
    template FockVector<S> apply_create<S>(int, const FockVector<S>&);                                               \
    template FockVector<S> apply_annihilate<S>(int, const FockVector<S>&, const scalar_traits<S>::real_type&);       \
    template FockVector<S> coherent_state<S>(const BasicSpecialization<S>&, const scalar_traits<S>::real_type&, int); \
    template FockVector<S> coherent_state_degree<S>(const BasicSpecialization<S>&, const scalar_traits<S>::real_type&, int); \
    template AuxFockVector<S> apply_lax<S>(const AuxFockVector<S>&, const ParamsFor<S>&, int);                     \
    template FockVector<S> apply_T<S>(int, const FockVector<S>&, const ParamsFor<S>&, int);                         \
    template FockVector<S> apply_cubic<S>(const FockVector<S>&, const ParamsFor<S>&);                               \
    template OperatorMoment<S> joint_moments_operator<S>(const std::vector<int>&, const BasicSpecialization<S>&,     \
                                                         const BasicSpecialization<S>&, const ParamsFor<S>&, int);   \
    template S joint_moments_truncated<S>(const std::vector<int>&, const BasicSpecialization<S>&,                   \
                                          const BasicSpecialization<S>&, const ParamsFor<S>&, int);                  \
    template S conditioned_moments<S>(const std::vector<int>&, const BasicSpecialization<S>&,                       \
                                      const BasicSpecialization<S>&, const ParamsFor<S>&, int);

JM_FOCK_INSTANTIATE(Complex)
JM_FOCK_INSTANTIATE(GaussRational)

}  // namespace jm
