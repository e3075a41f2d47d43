#pragma once

#include <map>
#include <optional>
#include <string>

#include "jm/scalar.hpp"

namespace jm {

struct DecayBound {
    double A = 1.0;
    double r = 0.5;
};

// Finitely supported assignment k -> V_k with no stored zeros.
template <class S>
class BasicSpecialization {
public:
    BasicSpecialization() = default;
    explicit BasicSpecialization(const std::map<int, S>& coeffs, std::optional<DecayBound> decay = std::nullopt);

    const std::map<int, S>& coeffs() const { return coeffs_; }
    const std::optional<DecayBound>& decay() const { return decay_; }
    S at(int k) const;
    bool contains(int k) const { return coeffs_.count(k) != 0; }
    // Largest k in the support (0 for the empty specialization).
    int support_bound() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    bool empty() const { return coeffs_.empty(); }

    void set(int k, const S& value);  // setting zero erases the entry
    BasicSpecialization negated() const;

    friend bool operator==(const BasicSpecialization& a, const BasicSpecialization& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::map<int, S> coeffs_;
    std::optional<DecayBound> decay_;
};

using Specialization = BasicSpecialization<Complex>;
using ExactSpecialization = BasicSpecialization<GaussRational>;

// V_1 = 1 and nothing else: the Plancherel specialization.
template <class S>
BasicSpecialization<S> plancherel_specialization();

Specialization to_numeric(const ExactSpecialization& v);
ExactSpecialization to_exact(const Specialization& v);

// Σ_k |V_k|^2 / k, the exponent of the Cauchy kernel without the 1/hbar.
double kernel_exponent(const Specialization& v);

// JSON: {"coeffs": {"1": [re, im], ...}, "decay": {"A": a, "r": r} | null}.
// Components may be numbers or rational strings such as "1/2".
ExactSpecialization exact_specialization_from_json(const std::string& text);
Specialization specialization_from_json(const std::string& text);
std::string specialization_to_json(const Specialization& v);
std::string specialization_to_json(const ExactSpecialization& v);

}  // namespace jm
