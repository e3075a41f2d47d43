#pragma once

#include <map>
#include <string>
#include <vector>

#include "jm/params.hpp"
#include "jm/partition.hpp"
#include "jm/specialization.hpp"

namespace jm {

struct JackEntry {
    Partition lambda;
    // Unit-norm eigenvector in the ρ_μ basis; the m_λ coefficient is positive.
    std::map<Partition, double> coefficients;
    // Norm of the eigenvector rescaled so that its m_λ coefficient equals 1.
    double norm = 0.0;
    // T_0..T_L eigenvalues (Rayleigh quotients of the normalized vector).
    std::vector<double> eigenvalues;
};

struct JackBasis {
    int degree = 0;
    Params params{};
    std::vector<JackEntry> entries;  // in the order of partitions_of_size(degree)

    const JackEntry& at(const Partition& lambda) const;
};

struct JackOptions {
    int max_degree = 10;
    double cluster_tol = 1e-9;  // relative eigenvalue gap below which vectors are refined further
    double label_tol = 1e-9;    // relative cancellation level treated as an exact zero
};

// Joint eigenvectors of T̂_3, T̂_4, ... on the degree-d Fock space, labelled by the
// dominance-leading monomial symmetric function in their expansion.
JackBasis jack_basis(int d, const Params& params, int L, const JackOptions& opts = {});

// Integer matrix R with p_μ = Σ_λ R[λ][μ] m_λ, rows and columns in partitions_of_size order.
std::vector<std::vector<double>> power_sum_to_monomial(int d);

// P^norm_λ evaluated at ρ_k = V_k.
Complex evaluate_jack(const JackEntry& entry, const Specialization& v);

// conj(P^norm_λ(V^out)) P^norm_λ(V^in) exp(-(1/hbar) Σ V^in_k conj(V^out_k) / k).
Complex jack_measure_prob(const Partition& lambda, const Specialization& v_out, const Specialization& v_in,
                          const Params& params, const JackOptions& opts = {});
Complex jack_measure_prob(const JackBasis& basis, const Partition& lambda, const Specialization& v_out,
                          const Specialization& v_in);

// hbar^d d! Π_{(i,j)} 1 / ((-eps2 (λ'_j - i) + eps1 (λ_i - j) + eps1) (-eps2 (λ'_j - i) + eps1 (λ_i - j) - eps2)).
template <class R>
R jack_plancherel_prob(const Partition& lambda, const BasicParams<R>& params);

std::string jack_basis_to_json(const JackBasis& basis);

}  // namespace jm
