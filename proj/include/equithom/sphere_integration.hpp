#pragma once

// Fiber integration over the fiber of C^l -> {0} for the honeycomb pair
// {T_0, T_1}: T_1 the closed unit ball, T_01 = -S^{2l-1} (opposite to the
// boundary orientation of T_1).
//
// Exact path (radial wedge trick): write d(sigma) ^ w = g dVol with dVol
// the standard volume form of R^{2l}; restrict to |z| = 1 and integrate
// monomial-by-monomial with the moments
//   int_{S^{2l-1}} prod |z_j|^{2 a_j} dS = 2 pi^l prod(a_j!) / (l-1+|a|)! ,
// monomials with unmatched z / zb exponents vanish. The single orientation
// constant (-1, realizing the T_01 orientation) is calibrated by the
// rank-one kernel integral and frozen.

#include "equithom/cech.hpp"
#include "equithom/form.hpp"

#include <complex>

namespace equithom {

// exact moment of prod |z_j|^{2 alpha_j} over the standard sphere
Scalar sphere_moment(const std::vector<int> &alpha, int rank);

// integral over T_01 = -S^{2l-1} of a homogeneous (2l-1)-form; X-monomials
// pass through linearly, so the result is an X-polynomial. Throws on forms
// of any other form degree (the degree guard) and on dt generators.
RationalCoefficient sphere_integrate_exact(const EquivariantForm &w);

// same path without the degree guard: pieces of form degree < 2l-1 wedge
// to nothing against d(sigma) and contribute exactly zero
RationalCoefficient sphere_integrate_exact_any_degree(const EquivariantForm &w);

// integral over the positively oriented closed unit ball of a polynomial
// 2l-form (denominators are rejected: the integrand must be smooth at 0)
RationalCoefficient ball_integrate_exact(const EquivariantForm &w);

struct MonteCarloEstimate
{
	std::complex<double> value;
	double stderr_1sigma; // combined per-component standard error
	long long samples;
};

// uniform sphere sampling from a counter-based deterministic stream keyed
// by (seed, sample index); frame orientation matches the exact path
MonteCarloEstimate sphere_integrate_mc(const EquivariantForm &w, long long samples,
                                       uint64_t seed);

// pi_* over the honeycomb of a relative triple: ball integral of xi1 plus
// T_01 integral of xi01 (form-degree 2l resp. 2l-1 pieces)
RationalCoefficient fiber_integrate_triple(const CechTriple &t);

// pi_*(alpha cup pi^* beta) - pi_*(alpha) * beta for constant beta
RationalCoefficient projection_formula_check(const CechTriple &alpha, const Scalar &beta);

} // namespace equithom
