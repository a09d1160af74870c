#pragma once

// Equivariant characteristic forms. Chern forms come from the graded
// determinant expansion of I + (i/2pi) kappa; the entries have even form
// degree, so the determinant is a plain permutation sum. Difference forms
// interpolate p+1 connections over the standard p-simplex, wedge in the
// dt directions and integrate the dt_1^...^dt_p coefficient exactly via
//   int_{Delta^p} t^a dt = prod(a_nu!) / (p + sum a_nu)!.
// Extraction convention: a term dt_1^...^dt_p ^ alpha contributes +alpha,
// pinned once by the rank-one transgression and then frozen.

#include "equithom/connection.hpp"

namespace equithom {

struct SimplexFamily
{
	std::vector<Connection> connections; // p + 1 entries

	explicit SimplexFamily(std::vector<Connection> conns);

	int rank() const { return connections[0].rank; }
	int simplex_dim() const { return int(connections.size()) - 1; }

	// (1 - sum_nu t_nu) theta^(0) + sum_nu t_nu theta^(nu)
	FormMatrix tilde_theta() const;

	// curvature of the interpolated connection on Delta^p x (C^l \ 0),
	// including the dt-terms sum_nu dt_nu ^ (theta^(nu) - theta^(0))
	FormMatrix tilde_curvature() const;
};

// sum of principal k x k minors of a matrix with commuting (even) entries
EquivariantForm principal_minor_sum(const FormMatrix &m, int k);

// degree-2k piece of det(I + (i/2pi) kappa); k in [0, l]
EquivariantForm chern_form(const Connection &c, int k);

// integrate the dt_1^...^dt_p coefficient of a form over the standard
// simplex; returns a form without dt generators or t variables
EquivariantForm integrate_over_simplex(const EquivariantForm &w, int p);

// the transgression c^k(nabla^(0), ..., nabla^(p)); for p = 0 this is the
// plain Chern form
EquivariantForm bott_difference(const SimplexFamily &family, int k);

// sum_nu (-1)^nu c^k(..omit nu..) + (-1)^p d_eq c^k(all); zero for
// families of invariant connections
EquivariantForm bott_cocycle_defect(const SimplexFamily &family, int k);

} // namespace equithom
