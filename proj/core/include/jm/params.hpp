#pragma once

#include "jm/scalar.hpp"

namespace jm {

// Anisotropy parameters stored as (eps1 > 0, eps2 < 0); R is double or Rational.
template <class R>
struct BasicParams {
    R eps1;
    R eps2;

    R ebar() const { return eps1 + eps2; }
    R hbar() const { return -(eps1 * eps2); }
    R alpha() const { return eps1 / (-eps2); }
};

using Params = BasicParams<double>;
using ExactParams = BasicParams<Rational>;

Params params_from_ebar_hbar(double ebar, double hbar);
Params params_from_alpha_hbar(double alpha, double hbar);
ExactParams exact_params_from_eps(const Rational& eps1, const Rational& eps2);
// Requires ebar^2 + 4 hbar to be the square of a rational.
ExactParams exact_params_from_ebar_hbar(const Rational& ebar, const Rational& hbar);
Params to_numeric(const ExactParams& p);
// Exact copy of numeric parameters (every finite double is a dyadic rational).
ExactParams to_exact(const Params& p);

// Scaled content eps2*(row-1) + eps1*(col-1) of the box (row, col).
template <class R>
R content(int row, int col, const BasicParams<R>& p) {
    return p.eps2 * (row - 1) + p.eps1 * (col - 1);
}

}  // namespace jm
