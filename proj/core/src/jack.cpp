#include "jm/jack.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <Eigen/Dense>
#include <json.hpp>

#include "jm/errors.hpp"
#include "jm/fock.hpp"

namespace jm {

const JackEntry& JackBasis::at(const Partition& lambda) const {
    for (const auto& e : entries) {
        if (e.lambda == lambda) return e;
    }
    throw DomainError("partition " + lambda.str() + " is not in the degree-" + std::to_string(degree) + " basis");
}

namespace {

using MonomialExpansion = std::map<Partition, double>;

// p_k m_ν = Σ_λ (multiplicity in λ of the part that received k) m_λ.
MonomialExpansion times_power_sum(int k, const MonomialExpansion& f) {
    MonomialExpansion out;
    for (const auto& [nu, c] : f) {
        std::vector<int> values(nu.parts().begin(), nu.parts().end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int a : values) {
            Partition lambda = nu.without_part(a).with_part(a + k);
            out[lambda] += c * lambda.multiplicity(a + k);
        }
        Partition lambda = nu.with_part(k);
        out[lambda] += c * lambda.multiplicity(k);
    }
    return out;
}

class SymmetricStack {
public:
    SymmetricStack(const std::vector<Partition>& basis, const Params& params) : basis_(basis), params_(params) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
        sqrt_norm_.resize(static_cast<Eigen::Index>(basis_.size()));
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            sqrt_norm_(static_cast<Eigen::Index>(i)) = std::sqrt(monomial_norm_squared(basis_[i], params_.hbar()));
        }
    }

    // N^{1/2} A_ℓ N^{-1/2} where A_ℓ is the matrix of T̂_ℓ in the ρ_μ basis.
    const Eigen::MatrixXd& matrix(int ell) {
        auto it = cache_.find(ell);
        if (it != cache_.end()) return it->second;
        const auto n = static_cast<Eigen::Index>(basis_.size());
        int d = basis_.empty() ? 0 : basis_.front().size();
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index col = 0; col < n; ++col) {
            auto x = FockVector<Complex>::monomial(basis_[static_cast<std::size_t>(col)], Complex(1.0, 0.0));
            FockVector<Complex> image = apply_T<Complex>(ell, x, params_, d);
            for (const auto& [mu, c] : image.entries()) {
                a(index_.at(mu), col) = c.real();
            }
        }
        Eigen::MatrixXd b = sqrt_norm_.asDiagonal() * a * sqrt_norm_.cwiseInverse().asDiagonal();
        b = 0.5 * (b + b.transpose());
        return cache_.emplace(ell, std::move(b)).first->second;
    }

    const Eigen::VectorXd& sqrt_norm() const { return sqrt_norm_; }

private:
    std::vector<Partition> basis_;
    Params params_;
    std::map<Partition, int> index_;
    Eigen::VectorXd sqrt_norm_;
    std::map<int, Eigen::MatrixXd> cache_;
};

void split_clusters(SymmetricStack& stack, const Eigen::MatrixXd& q, int ell, int ell_max, double tol,
                    std::vector<Eigen::VectorXd>& out) {
    if (q.cols() == 1) {
        out.push_back(q.col(0));
        return;
    }
    if (ell > ell_max) {
        throw LabelingError("joint spectrum of T_3..T_" + std::to_string(ell_max) + " stays degenerate");
    }
    Eigen::MatrixXd m = q.transpose() * stack.matrix(ell) * q;
    m = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    const Eigen::VectorXd& values = solver.eigenvalues();
    double scale = 1.0 + values.cwiseAbs().maxCoeff();
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values(i) - values(i - 1) > tol * scale) {
            Eigen::MatrixXd sub = q * solver.eigenvectors().middleCols(start, i - start);
            split_clusters(stack, sub, ell + 1, ell_max, tol, out);
            start = i;
        }
    }
}

}  // namespace

std::vector<std::vector<double>> power_sum_to_monomial(int d) {
    if (d < 0) throw DomainError("degree must be nonnegative");
    std::vector<Partition> basis = partitions_of_size(d);
    std::map<Partition, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    std::map<Partition, MonomialExpansion> memo;
    memo[Partition{}] = MonomialExpansion{{Partition{}, 1.0}};
    // Build p_μ from its suffix p_{μ_2, μ_3, ...}.
    std::function<const MonomialExpansion&(const Partition&)> expand = [&](const Partition& mu) -> const MonomialExpansion& {
        auto it = memo.find(mu);
        if (it != memo.end()) return it->second;
        std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
        MonomialExpansion value = times_power_sum(mu[0], expand(Partition(rest)));
        return memo.emplace(mu, std::move(value)).first->second;
    };
    std::vector<std::vector<double>> r(basis.size(), std::vector<double>(basis.size(), 0.0));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const auto& [lambda, c] : expand(basis[col])) r[static_cast<std::size_t>(index.at(lambda))][col] = c;
    }
    return r;
}

JackBasis jack_basis(int d, const Params& params, int L, const JackOptions& opts) {
    if (d < 0) throw DomainError("degree must be nonnegative");
    if (d > opts.max_degree) {
        throw DomainError("degree " + std::to_string(d) + " exceeds the configured maximum " + std::to_string(opts.max_degree));
    }
    if (L < 0) throw DomainError("eigenvalue table order must be nonnegative");
    if (!(params.hbar() > 0)) throw DomainError("hbar must be positive");
    JackBasis basis;
    basis.degree = d;
    basis.params = params;
    std::vector<Partition> mus = partitions_of_size(d);
    const auto n = static_cast<Eigen::Index>(mus.size());
    SymmetricStack stack(mus, params);

    std::vector<Eigen::VectorXd> vectors;
    split_clusters(stack, Eigen::MatrixXd::Identity(n, n), 3, std::max(d + 3, 6), opts.cluster_tol, vectors);

    // Dominance labelling through the monomial symmetric expansion; ρ_μ = (-eps2)^{l(μ)} p_μ.
    std::vector<std::vector<double>> r = power_sum_to_monomial(d);
    Eigen::VectorXd weight(n);
    for (Eigen::Index i = 0; i < n; ++i) weight(i) = std::pow(-params.eps2, mus[static_cast<std::size_t>(i)].length());

    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, Eigen::VectorXd>> labelled;
    for (const Eigen::VectorXd& y : vectors) {
        Eigen::VectorXd x = y.cwiseQuotient(stack.sqrt_norm());
        Eigen::VectorXd px = x.cwiseProduct(weight);
        int label = -1;
        double lead = 0.0;
        for (Eigen::Index row = 0; row < n && label < 0; ++row) {
            double c = 0.0, mass = 0.0;
            for (Eigen::Index col = 0; col < n; ++col) {
                double term = r[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * px(col);
                c += term;
                mass += std::abs(term);
            }
            if (mass > 0.0 && std::abs(c) > opts.label_tol * mass) {
                label = static_cast<int>(row);
                lead = c;
            }
        }
        if (label < 0) throw LabelingError("eigenvector with no monomial support");
        if (owner[static_cast<std::size_t>(label)] >= 0) {
            throw LabelingError("two eigenvectors share the leading monomial " + mus[static_cast<std::size_t>(label)].str());
        }
        owner[static_cast<std::size_t>(label)] = static_cast<int>(labelled.size());
        double sign = lead > 0 ? 1.0 : -1.0;
        labelled.emplace_back(label, sign * y);
    }

    std::vector<const Eigen::MatrixXd*> tables;
    for (int ell = 2; ell <= L; ++ell) tables.push_back(&stack.matrix(ell));
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& [label, y] = labelled[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])];
        JackEntry entry;
        entry.lambda = mus[static_cast<std::size_t>(label)];
        Eigen::VectorXd x = y.cwiseQuotient(stack.sqrt_norm());
        for (Eigen::Index k = 0; k < n; ++k) {
            if (x(k) != 0.0) entry.coefficients.emplace(mus[static_cast<std::size_t>(k)], x(k));
        }
        double lead = 0.0;
        for (Eigen::Index col = 0; col < n; ++col) lead += r[static_cast<std::size_t>(label)][static_cast<std::size_t>(col)] * x(col) * weight(col);
        entry.norm = 1.0 / lead;
        for (int ell = 0; ell <= L; ++ell) {
            if (ell == 0) {
                entry.eigenvalues.push_back(1.0);
            } else if (ell == 1) {
                entry.eigenvalues.push_back(0.0);
            } else {
                entry.eigenvalues.push_back(y.dot(*tables[static_cast<std::size_t>(ell - 2)] * y));
            }
        }
        basis.entries.push_back(std::move(entry));
    }
    return basis;
}

Complex evaluate_jack(const JackEntry& entry, const Specialization& v) {
    Complex total(0.0, 0.0);
    for (const auto& [mu, c] : entry.coefficients) {
        Complex term(c, 0.0);
        for (int k : mu.parts()) term *= v.at(k);
        total += term;
    }
    return total;
}

Complex jack_measure_prob(const JackBasis& basis, const Partition& lambda, const Specialization& v_out,
                          const Specialization& v_in) {
    if (lambda.size() != basis.degree) throw DomainError("partition size does not match the basis degree");
    const JackEntry& entry = basis.at(lambda);
    Complex exponent(0.0, 0.0);
    for (const auto& [k, z] : v_in.coeffs()) exponent += z * std::conj(v_out.at(k)) / static_cast<double>(k);
    exponent /= basis.params.hbar();
    return std::conj(evaluate_jack(entry, v_out)) * evaluate_jack(entry, v_in) * std::exp(-exponent);
}

Complex jack_measure_prob(const Partition& lambda, const Specialization& v_out, const Specialization& v_in,
                          const Params& params, const JackOptions& opts) {
    JackBasis basis = jack_basis(lambda.size(), params, 0, opts);
    return jack_measure_prob(basis, lambda, v_out, v_in);
}

template <class R>
R jack_plancherel_prob(const Partition& lambda, const BasicParams<R>& params) {
    if (!(params.hbar() > 0)) throw DomainError("hbar must be positive");
    Partition conj = transpose(lambda);
    R out = 1;
    for (int m = 1; m <= lambda.size(); ++m) out *= params.hbar() * m;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            R leg = -params.eps2 * (conj.part(j) - i);
            R arm = params.eps1 * (lambda.part(i) - j);
            out /= (leg + arm + params.eps1) * (leg + arm - params.eps2);
        }
    }
    return out;
}

template double jack_plancherel_prob<double>(const Partition&, const BasicParams<double>&);
template Rational jack_plancherel_prob<Rational>(const Partition&, const BasicParams<Rational>&);

std::string jack_basis_to_json(const JackBasis& basis) {
    using nlohmann::json;
    json out;
    out["degree"] = basis.degree;
    out["eps1"] = basis.params.eps1;
    out["eps2"] = basis.params.eps2;
    out["entries"] = json::array();
    for (const auto& e : basis.entries) {
        json item;
        item["lambda"] = e.lambda.parts();
        item["norm"] = e.norm;
        item["eigenvalues"] = e.eigenvalues;
        json coeffs = json::object();
        for (const auto& [mu, c] : e.coefficients) coeffs[mu.str()] = json::array({c, 0.0});
        item["coefficients"] = coeffs;
        out["entries"].push_back(item);
    }
    return out.dump(2);
}

}  // namespace jm
