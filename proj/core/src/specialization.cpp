#include "jm/specialization.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

#include "jm/errors.hpp"

namespace jm {

template <class S>
BasicSpecialization<S>::BasicSpecialization(const std::map<int, S>& coeffs, std::optional<DecayBound> decay)
    : decay_(decay) {
    for (const auto& [k, value] : coeffs) {
        if (k < 1) throw DomainError("specialization index must be positive, got " + std::to_string(k));
        if (!scalar_traits<S>::is_zero(value)) coeffs_.emplace(k, value);
    }
    if (decay_) {
        if (!(decay_->A > 0.0) || !(decay_->r > 0.0 && decay_->r < 1.0)) {
            throw DomainError("decay bound needs A > 0 and 0 < r < 1");
        }
        for (const auto& [k, value] : coeffs_) {
            double mag = std::abs(scalar_traits<S>::to_complex(value));
            double bound = decay_->A * std::pow(decay_->r, k);
            if (mag > bound * (1.0 + 1e-12)) {
                throw DomainError("|V_" + std::to_string(k) + "| exceeds the declared decay bound");
            }
        }
    }
}

template <class S>
S BasicSpecialization<S>::at(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? scalar_traits<S>::from_int(0) : it->second;
}

template <class S>
void BasicSpecialization<S>::set(int k, const S& value) {
    if (k < 1) throw DomainError("specialization index must be positive");
    if (scalar_traits<S>::is_zero(value)) {
        coeffs_.erase(k);
    } else {
        coeffs_[k] = value;
    }
}

template <class S>
BasicSpecialization<S> BasicSpecialization<S>::negated() const {
    BasicSpecialization out;
    for (const auto& [k, value] : coeffs_) out.coeffs_.emplace(k, -value);
    out.decay_ = decay_;
    return out;
}

template class BasicSpecialization<Complex>;
template class BasicSpecialization<GaussRational>;

template <>
Specialization plancherel_specialization<Complex>() {
    return Specialization({{1, Complex(1.0, 0.0)}});
}

template <>
ExactSpecialization plancherel_specialization<GaussRational>() {
    return ExactSpecialization({{1, GaussRational(1)}});
}

Specialization to_numeric(const ExactSpecialization& v) {
    std::map<int, Complex> c;
    for (const auto& [k, z] : v.coeffs()) c.emplace(k, scalar_traits<GaussRational>::to_complex(z));
    return Specialization(c, v.decay());
}

ExactSpecialization to_exact(const Specialization& v) {
    std::map<int, GaussRational> c;
    for (const auto& [k, z] : v.coeffs()) c.emplace(k, GaussRational(rational_from_double(z.real()), rational_from_double(z.imag())));
    return ExactSpecialization(c, v.decay());
}

double kernel_exponent(const Specialization& v) {
    double s = 0.0;
    for (const auto& [k, z] : v.coeffs()) s += std::norm(z) / k;
    return s;
}

namespace {

using nlohmann::json;

Rational component(const json& value, const std::string& where) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number()) return rational_from_double(value.get<double>());
    throw DomainError("specialization component at " + where + " must be a number or rational string");
}

}  // namespace

ExactSpecialization exact_specialization_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("specialization JSON is malformed: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_object()) {
        throw DomainError("specialization JSON needs an object member \"coeffs\"");
    }
    std::map<int, GaussRational> coeffs;
    for (auto it = doc["coeffs"].begin(); it != doc["coeffs"].end(); ++it) {
        int k = 0;
        const std::string& key = it.key();
        auto res = std::from_chars(key.data(), key.data() + key.size(), k);
        if (res.ec != std::errc() || res.ptr != key.data() + key.size() || k < 1) {
            throw DomainError("specialization key must be a positive integer, got \"" + key + "\"");
        }
        const json& pair = it.value();
        if (pair.is_array() && pair.size() == 2) {
            coeffs[k] = GaussRational(component(pair[0], key), component(pair[1], key));
        } else {
            coeffs[k] = GaussRational(component(pair, key));
        }
    }
    std::optional<DecayBound> decay;
    if (doc.contains("decay") && !doc["decay"].is_null()) {
        const json& d = doc["decay"];
        if (!d.is_object() || !d.contains("A") || !d.contains("r")) throw DomainError("decay must be {\"A\": a, \"r\": r} or null");
        decay = DecayBound{d["A"].get<double>(), d["r"].get<double>()};
    }
    return ExactSpecialization(coeffs, decay);
}

Specialization specialization_from_json(const std::string& text) {
    return to_numeric(exact_specialization_from_json(text));
}

std::string specialization_to_json(const Specialization& v) {
    json doc;
    doc["coeffs"] = json::object();
    for (const auto& [k, z] : v.coeffs()) doc["coeffs"][std::to_string(k)] = json::array({z.real(), z.imag()});
    if (v.decay()) {
        doc["decay"] = {{"A", v.decay()->A}, {"r", v.decay()->r}};
    } else {
        doc["decay"] = nullptr;
    }
    return doc.dump();
}

std::string specialization_to_json(const ExactSpecialization& v) {
    json doc;
    doc["coeffs"] = json::object();
    for (const auto& [k, z] : v.coeffs()) doc["coeffs"][std::to_string(k)] = json::array({to_string(z.re), to_string(z.im)});
    if (v.decay()) {
        doc["decay"] = {{"A", v.decay()->A}, {"r", v.decay()->r}};
    } else {
        doc["decay"] = nullptr;
    }
    return doc.dump();
}

}  // namespace jm
