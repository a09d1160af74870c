#pragma once

// Equivariant connections on the pulled-back trivial bundle over C^l \ {0},
// in the standard frame s_i(z) = (e_i, z): a connection matrix theta of
// one-forms together with the matrix ell(X) of the infinitesimal bundle
// action on the frame. Entry (i,j) of the stored matrices feeds the
// curvature entrywise as
//   kappa_ij = d theta_ij + sum_k theta_ik ^ theta_kj - i_X theta_ij + ell_ij(X),
// the orientation of the transpose being pinned by kappa(D^1) = X.

#include "equithom/form.hpp"

namespace equithom {

using FormMatrix = std::vector<std::vector<EquivariantForm>>;

FormMatrix form_matrix_zero(int rank, int simplex_dim = 0);
FormMatrix form_matrix_mul(const FormMatrix &a, const FormMatrix &b);
FormMatrix form_matrix_sub(const FormMatrix &a, const FormMatrix &b);
FormMatrix form_matrix_add(const FormMatrix &a, const FormMatrix &b);
bool form_matrix_is_zero(const FormMatrix &a);

struct Connection
{
	int rank = 0;
	FormMatrix theta;                                   // pure one-forms
	std::vector<std::vector<RationalCoefficient>> ell;  // X-linear, z-free

	Connection() = default;
	Connection(int rank_, FormMatrix theta_, std::vector<std::vector<RationalCoefficient>> ell_);

	void validate() const;
};

// theta = 0, ell(X) = X; curvature is the matrix [X_ij]
Connection builtin_d1(int rank);

// theta_ij = -(zb_j/|z|^2) dz_i, ell(X) = X; annihilates the diagonal
// section, so its top Chern form vanishes
Connection builtin_d0(int rank);

// kappa_ij = d theta_ij + (theta^2)_ij - i_X theta_ij + ell_ij(X)
FormMatrix curvature(const Connection &c);

// d_eq kappa - [kappa, theta]; zero for every connection induced by an
// invariant one
FormMatrix bianchi_defect(const Connection &c);

// L_X theta + [ell(X), theta]; zero iff the connection is invariant.
// bianchi_defect equals minus this matrix for arbitrary theta.
FormMatrix invariance_defect(const Connection &c);

// component j of  nabla(sum_i f_i s_i)  =  d f_j + sum_i theta_ji f_i
std::vector<EquivariantForm> apply_to_section(const Connection &c,
                                              const std::vector<RationalCoefficient> &coeffs);

// sum_nu w_nu * c_nu entrywise on theta (ell matrices must agree and the
// weights must sum to one, so the result is again a connection)
Connection affine_combination(const std::vector<std::pair<RationalCoefficient, Connection>> &parts);

} // namespace equithom
