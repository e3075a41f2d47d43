#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jm/bipoly.hpp"
#include "jm/params.hpp"
#include "jm/partition.hpp"
#include "jm/profile.hpp"
#include "jm/specialization.hpp"

namespace jm {

// v(x) = Σ_k (V_k e^{-ikx} + conj(V_k) e^{ikx}).
double symbol_eval(const Specialization& v, double x);

// O_0..O_P of the push-forward of the uniform measure on the circle along v; O_0 = 1.
// Exact: constant terms of powers of the Laurent polynomial of v.
std::vector<double> convex_profile_moments(const Specialization& v, int P);
// Same moments by the N-point trapezoid rule on the circle (N = 0 picks a size exact for trigonometric polynomials).
std::vector<double> convex_profile_moments_quadrature(const Specialization& v, int P, int N = 0);

// f(c) = ∫ |c - v(x)| dx / 2π by adaptive Gauss-Kronrod quadrature.
double convex_profile_value(const Specialization& v, double c);
// (2/π)(c arcsin(c/2) + sqrt(4 - c^2)) on [-2, 2], |c| outside.
double vkls_profile(double c);

// Top-left M x M block of the Lax matrix: conj(V_{j'-j}) above the diagonal, V_{j-j'} below, ebar j on it.
struct TruncatedLax {
    int M = 0;
    double ebar = 0.0;
    std::vector<Complex> entries;  // row-major
    Complex at(int j, int jp) const { return entries[static_cast<std::size_t>(j) * M + jp]; }
};

TruncatedLax truncated_lax(const Specialization& v, double ebar, int M);

// Eigenvalues θ_k (ascending) and weights |w_k(0)|^2 of the first basis vector.
struct SpectralData {
    std::vector<double> eigenvalues;
    std::vector<double> weights;
};
SpectralData spectral_data(const TruncatedLax& lax);

// <ψ_0, (u - L)^{-1} ψ_0> = Σ |w_k(0)|^2 / (u - θ_k); throws DomainError within 1e-8 of an eigenvalue.
Complex resolvent_00(const TruncatedLax& lax, Complex u);
Complex resolvent_00(const SpectralData& spectrum, Complex u);

// <ψ_0, L^ℓ ψ_0> for ℓ = 0..L by repeated products with the truncated matrix.
std::vector<Complex> lax_moments(const TruncatedLax& lax, int L);

// Poles (the S↑, descending) and zeros (the S↓, descending) of the truncated resolvent.
struct DispersiveProfileData {
    std::vector<double> poles;
    std::vector<double> zeros;
    int M = 0;
    double ebar = 0.0;
    double weight_floor = 1e-10;
    double dropped_weight = 0.0;    // spectral mass of the poles under the floor
    std::vector<double> gap_ratios;  // (S↑_{i-1} - S↓_i) / |ebar|
    InterlacingProfile<double> as_profile() const;  // minima = poles, maxima = zeros, ascending
};

// Throws TruncationError if the recovered zeros do not interlace with the poles.
DispersiveProfileData dispersive_profile(const Specialization& v, double ebar, int M, double weight_floor = 1e-10);

// 𝐓_0..𝐓_L with 𝐓_ℓ = Σ_m W_{1,0,m}(ℓ | v, v) ebar^m.
std::vector<Complex> limit_moments_paths(const Specialization& v, double ebar, int L);
// 𝐎_0..𝐎_P obtained from the path moments through the KMK transform.
std::vector<Complex> limit_linear_statistics(const Specialization& v, double ebar, int P);

// Σ_k k ∂²/∂conj(V_k^(1)) ∂V_k^(2) of 𝐎_{p1}(v^(1)) 𝐎_{p2}(v^(2)) at v^(1) = v^(2) = v by central
// Wirtinger differences of step delta, for k up to support_bound(v) * max(p1, p2). Real part.
double covariance_welding(const Specialization& v, double ebar, int p1, int p2, double delta = 1e-4);

// g = 0 part of the decorated cumulant κ_2(O_{p1}, O_{p2}), evaluated at ebar.
double covariance_paths(const Specialization& v, double ebar, int p1, int p2);
// Exact version: the ebar polynomial Σ_m W^dec_{2,0,m}(p1, p2) ebar^m (key (1, m) of the result).
BiPolynomial<GaussRational> covariance_paths_poly(const ExactSpecialization& v, int p1, int p2);

// Σ_k k ĉ_k(Q1 ∘ v) ĉ_{-k}(Q2 ∘ v) with ĉ_k(F) = ∫ F(x) e^{ikx} dx/2π (trapezoid, N points):
// the covariance of ∫ Q_j(c) ½ 𝐆'(c) dc in the ebar = 0 regime.
double test_function_covariance(const Specialization& v, const std::function<double(double)>& q1,
                                const std::function<double(double)>& q2, int N);

// Covariance of 𝐆_{p1}, 𝐆_{p2} by the Fourier formula with Q_j(c) = p_j c^{p_j - 1}.
double covariance_bd(const Specialization& v, int p1, int p2);

// Cov[∫ U_{k1-1}(c/2) ½𝐆(c) dc, ∫ U_{k2-1}(c/2) ½𝐆(c) dc] for the Plancherel specialization at ebar = 0.
double chebyshev_covariance(int k1, int k2);
double chebyshev_variance(int k);

// d/d ebar of 𝐎_p at ebar = 0, p = 0..P, by central differences of the path moments.
std::vector<double> mean_shift_moments(const Specialization& v, int P, double delta = 1e-4);
// Same derivative read off exactly as the m = 1 coefficient of the decorated single-site expansion.
std::vector<Rational> mean_shift_moments_exact(const ExactSpecialization& v, int P);
// Plancherel case from d𝐓/d ebar = S_-(u)^2 / (u^2 - 4): 𝐗_p = p [u^{-p}] S_-(u) / (u^2 - 4).
std::vector<double> plancherel_mean_shift_series(int P);
// -(1/2π) arcsin(c/2) for |c| <= 2 and 0 otherwise.
double plancherel_mean_shift(double c);
// ∫ c^p ½ X''(c) dc = ½ p (p-1) ∫ c^{p-2} X(c) dc for the closed form above, p = 0..P.
std::vector<double> plancherel_mean_shift_closed_moments(int P);

// Moments and covariances at ebar > 0 computed from the data at (-v, -ebar).
struct ReflectedData {
    std::vector<Complex> moments;             // 𝐓_0..𝐓_L
    std::map<std::pair<int, int>, double> covariance;  // (p1, p2) -> 𝚺
};
ReflectedData regime3_reflection(const Specialization& v, double ebar, int L, int P);

// Π_a Π_c (u_a - c)(u_a - c - ebar) / ((u_a - c - eps2)(u_a - c - eps1)).
Complex g_up_weight(const std::vector<double>& contents, const std::vector<Complex>& u, const Params& params);
// Contents of every box of λ.
std::vector<double> box_contents(const Partition& lambda, const Params& params);
// Π_a u_a T(u_a) with u T(u) = Π(u - maxima) / Π(u - minima) over the profile extrema of λ.
Complex transition_stieltjes_product(const Partition& lambda, const std::vector<Complex>& u, const Params& params);

}  // namespace jm
