#include "jm/profile.hpp"

#include <algorithm>
#include <cmath>

#include "jm/errors.hpp"

namespace jm {

namespace {

template <class R>
R absval(const R& x) {
    return x < 0 ? R(-x) : x;
}

template <class R>
bool close_enough(const R& a, const R& b, const R& scale);

template <>
bool close_enough<double>(const double& a, const double& b, const double& scale) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(scale));
}

template <>
bool close_enough<Rational>(const Rational& a, const Rational& b, const Rational&) {
    return a == b;
}

}  // namespace

template <class R>
void check_interlacing(const InterlacingProfile<R>& profile) {
    if (profile.minima.size() != profile.maxima.size() + 1) {
        throw ConsistencyError("profile needs exactly one more minimum than maxima");
    }
    for (std::size_t i = 0; i < profile.maxima.size(); ++i) {
        if (!(profile.minima[i] < profile.maxima[i]) || !(profile.maxima[i] < profile.minima[i + 1])) {
            throw ConsistencyError("profile extrema do not interlace strictly");
        }
    }
}

template <class R>
InterlacingProfile<R> profile_of(const Partition& lambda, const BasicParams<R>& params) {
    InterlacingProfile<R> profile;
    for (auto [row, col] : addable_cells(lambda)) profile.minima.push_back(content(row, col, params));
    R shift = params.ebar();
    for (auto [row, col] : removable_cells(lambda)) profile.maxima.push_back(content(row, col, params) + shift);
    std::sort(profile.minima.begin(), profile.minima.end());
    std::sort(profile.maxima.begin(), profile.maxima.end());
    check_interlacing(profile);
    return profile;
}

template <class R>
R profile_value(const InterlacingProfile<R>& profile, const R& c) {
    R f = 0;
    for (const R& x : profile.minima) f += absval(R(c - x));
    for (const R& y : profile.maxima) f -= absval(R(c - y));
    return f;
}

template <class R>
R geometric_area(const InterlacingProfile<R>& profile) {
    std::vector<R> cuts(profile.minima.begin(), profile.minima.end());
    cuts.insert(cuts.end(), profile.maxima.begin(), profile.maxima.end());
    cuts.push_back(R(0));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    R area = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const R& a = cuts[i];
        const R& b = cuts[i + 1];
        R fa = profile_value(profile, a) - absval(a);
        R fb = profile_value(profile, b) - absval(b);
        area += (b - a) * (fa + fb) / 2;
    }
    return area;
}

template <class R>
R profile_area(const Partition& lambda, const BasicParams<R>& params) {
    R expected = 2 * params.hbar() * lambda.size();
    R measured = geometric_area(profile_of(lambda, params));
    if (!close_enough(expected, measured, expected)) {
        throw ConsistencyError("profile area disagrees with 2*hbar*|lambda| for " + lambda.str());
    }
    return expected;
}

template <class R>
std::vector<R> transition_moments(const InterlacingProfile<R>& profile, int L) {
    if (L < 0) throw DomainError("series order must be nonnegative");
    std::vector<R> o = linear_statistics(profile, L);
    return kmk_T_from_O(o);
}

template <class R>
std::vector<R> transition_moments_content_product(const Partition& lambda, const BasicParams<R>& params, int L) {
    if (L < 0) throw DomainError("series order must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(L) + 1;
    std::vector<R> num(n, R(0)), den(n, R(0));
    num[0] = 1;
    den[0] = 1;
    // Multiplies a truncated series by (1 - a z).
    auto times_linear = [n](std::vector<R>& s, const R& a) {
        for (std::size_t i = n - 1; i >= 1; --i) s[i] -= a * s[i - 1];
    };
    R ebar = params.ebar();
    for (int row = 1; row <= lambda.length(); ++row) {
        for (int col = 1; col <= lambda.part(row); ++col) {
            R c = content(row, col, params);
            times_linear(num, c);
            times_linear(num, R(c + ebar));
            times_linear(den, R(c + params.eps2));
            times_linear(den, R(c + params.eps1));
        }
    }
    std::vector<R> t(n, R(0));
    for (std::size_t i = 0; i < n; ++i) {
        R acc = num[i];
        for (std::size_t j = 1; j <= i; ++j) acc -= den[j] * t[i - j];
        t[i] = acc;  // den[0] = 1
    }
    return t;
}

template <class R>
std::vector<R> linear_statistics(const InterlacingProfile<R>& profile, int P) {
    if (P < 0) throw DomainError("statistic order must be nonnegative");
    std::vector<R> o(static_cast<std::size_t>(P) + 1, R(0));
    for (const R& x : profile.minima) {
        R power = 1;
        for (int p = 0; p <= P; ++p) {
            o[p] += power;
            power *= x;
        }
    }
    for (const R& y : profile.maxima) {
        R power = 1;
        for (int p = 0; p <= P; ++p) {
            o[p] -= power;
            power *= y;
        }
    }
    return o;
}

template <class F>
std::vector<F> kmk_O_from_T(const std::vector<F>& t) {
    if (t.empty()) return {};
    if (!(t[0] == F(1))) throw DomainError("moment sequence must start with T_0 = 1");
    std::vector<F> o(t.size(), F(0));
    o[0] = F(1);
    for (std::size_t l = 1; l < t.size(); ++l) {
        F acc = F(static_cast<int>(l)) * t[l];
        for (std::size_t p = 1; p < l; ++p) acc -= o[p] * t[l - p];
        o[l] = acc;
    }
    return o;
}

template <class F>
std::vector<F> kmk_T_from_O(const std::vector<F>& o) {
    if (o.empty()) return {};
    std::vector<F> t(o.size(), F(0));
    t[0] = F(1);
    for (std::size_t l = 1; l < o.size(); ++l) {
        F acc = F(0);
        for (std::size_t p = 1; p <= l; ++p) acc += o[p] * t[l - p];
        t[l] = acc / F(static_cast<int>(l));
    }
    return t;
}

KmkPolynomial kmk_polynomial(int p) {
    if (p < 1) throw DomainError("KMK polynomial index must be positive");
    // O_l = l T_l - Σ_{q<l} O_q T_{l-q}
    std::vector<KmkPolynomial> o(static_cast<std::size_t>(p) + 1);
    auto times_t = [](const KmkPolynomial& poly, int index) {
        KmkPolynomial out;
        for (const auto& [key, c] : poly) {
            std::vector<int> k = key;
            k.push_back(index);
            std::sort(k.begin(), k.end(), std::greater<int>());
            out[k] += c;
        }
        return out;
    };
    for (int l = 1; l <= p; ++l) {
        KmkPolynomial cur;
        cur[{l}] += l;
        for (int q = 1; q < l; ++q) {
            for (const auto& [key, c] : times_t(o[q], l - q)) cur[key] -= c;
        }
        for (auto it = cur.begin(); it != cur.end();) {
            it = it->second == 0 ? cur.erase(it) : std::next(it);
        }
        o[l] = std::move(cur);
    }
    return o[p];
}

#define JM_PROFILE_INSTANTIATE(R)                                                                         \
    template void check_interlacing<R>(const InterlacingProfile<R>&);                                   \
    template InterlacingProfile<R> profile_of<R>(const Partition&, const BasicParams<R>&);              \
    template R profile_value<R>(const InterlacingProfile<R>&, const R&);                                 \
    template R geometric_area<R>(const InterlacingProfile<R>&);                                          \
    template R profile_area<R>(const Partition&, const BasicParams<R>&);                                 \
    template std::vector<R> transition_moments<R>(const InterlacingProfile<R>&, int);                   \
    template std::vector<R> transition_moments_content_product<R>(const Partition&, const BasicParams<R>&, int); \
    template std::vector<R> linear_statistics<R>(const InterlacingProfile<R>&, int);

JM_PROFILE_INSTANTIATE(double)
JM_PROFILE_INSTANTIATE(Rational)

template std::vector<double> kmk_O_from_T<double>(const std::vector<double>&);
template std::vector<double> kmk_T_from_O<double>(const std::vector<double>&);
template std::vector<Rational> kmk_O_from_T<Rational>(const std::vector<Rational>&);
template std::vector<Rational> kmk_T_from_O<Rational>(const std::vector<Rational>&);
template std::vector<Complex> kmk_O_from_T<Complex>(const std::vector<Complex>&);
template std::vector<Complex> kmk_T_from_O<Complex>(const std::vector<Complex>&);
template std::vector<GaussRational> kmk_O_from_T<GaussRational>(const std::vector<GaussRational>&);
template std::vector<GaussRational> kmk_T_from_O<GaussRational>(const std::vector<GaussRational>&);

}  // namespace jm
