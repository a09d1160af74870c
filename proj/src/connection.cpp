#include "equithom/connection.hpp"

namespace equithom {

FormMatrix form_matrix_zero(int rank, int simplex_dim)
{
	return FormMatrix(rank, std::vector<EquivariantForm>(rank, EquivariantForm(rank, simplex_dim)));
}

FormMatrix form_matrix_mul(const FormMatrix &a, const FormMatrix &b)
{
	int n = int(a.size());
	FormMatrix r(n, std::vector<EquivariantForm>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			EquivariantForm s(a[i][j].rank(), a[i][j].simplex_dim());
			for (int k = 0; k < n; ++k)
				s += wedge(a[i][k], b[k][j]);
			r[i][j] = std::move(s);
		}
	return r;
}

FormMatrix form_matrix_sub(const FormMatrix &a, const FormMatrix &b)
{
	FormMatrix r = a;
	for (size_t i = 0; i < r.size(); ++i)
		for (size_t j = 0; j < r.size(); ++j)
			r[i][j] -= b[i][j];
	return r;
}

FormMatrix form_matrix_add(const FormMatrix &a, const FormMatrix &b)
{
	FormMatrix r = a;
	for (size_t i = 0; i < r.size(); ++i)
		for (size_t j = 0; j < r.size(); ++j)
			r[i][j] += b[i][j];
	return r;
}

bool form_matrix_is_zero(const FormMatrix &a)
{
	for (const auto &row : a)
		for (const auto &f : row)
			if (!f.is_zero())
				return false;
	return true;
}

Connection::Connection(int rank_, FormMatrix theta_,
                       std::vector<std::vector<RationalCoefficient>> ell_)
    : rank(rank_), theta(std::move(theta_)), ell(std::move(ell_))
{
	validate();
}

void Connection::validate() const
{
	if (int(theta.size()) != rank || int(ell.size()) != rank)
		throw std::invalid_argument("Connection: matrix size mismatch");
	for (const auto &row : theta) {
		if (int(row.size()) != rank)
			throw std::invalid_argument("Connection: theta not square");
		for (const auto &f : row)
			if (!f.is_zero() && !f.is_form_homogeneous(1))
				throw std::invalid_argument("Connection: theta entries must be one-forms");
	}
	for (const auto &row : ell) {
		if (int(row.size()) != rank)
			throw std::invalid_argument("Connection: ell not square");
		for (const auto &c : row) {
			if (c.denom_exp() != 0)
				throw std::invalid_argument("Connection: ell entries must be polynomial");
			if (!c.is_zero() && !(c.numerator().is_homogeneous_in_kind(VarKind::X, 1) &&
			                      !c.numerator().has_kind(VarKind::z) &&
			                      !c.numerator().has_kind(VarKind::zb)))
				throw std::invalid_argument("Connection: ell entries must be X-linear, z-free");
		}
	}
}

Connection builtin_d1(int rank)
{
	if (rank < 1)
		throw std::invalid_argument("builtin_d1: rank must be positive");
	FormMatrix theta = form_matrix_zero(rank);
	std::vector ell(rank, std::vector<RationalCoefficient>(rank));
	for (int i = 0; i < rank; ++i)
		for (int j = 0; j < rank; ++j)
			ell[i][j] = RationalCoefficient(rank, Polynomial::variable(x_var(i + 1, j + 1)));
	return Connection(rank, std::move(theta), std::move(ell));
}

Connection builtin_d0(int rank)
{
	Connection c = builtin_d1(rank);
	for (int i = 0; i < rank; ++i)
		for (int j = 0; j < rank; ++j)
			c.theta[i][j] =
			    EquivariantForm::generator(rank, {GenKind::dz, i + 1}) *
			    RationalCoefficient(rank, -Polynomial::variable(zb_var(j + 1)), 1);
	return c;
}

FormMatrix curvature(const Connection &c)
{
	FormMatrix kappa = form_matrix_mul(c.theta, c.theta);
	for (int i = 0; i < c.rank; ++i)
		for (int j = 0; j < c.rank; ++j) {
			kappa[i][j] += exterior_derivative(c.theta[i][j]);
			kappa[i][j] -= contract_x(c.theta[i][j]);
			kappa[i][j] += EquivariantForm::scalar(c.rank, c.ell[i][j]);
		}
	return kappa;
}

FormMatrix bianchi_defect(const Connection &c)
{
	FormMatrix kappa = curvature(c);
	FormMatrix commutator =
	    form_matrix_sub(form_matrix_mul(kappa, c.theta), form_matrix_mul(c.theta, kappa));
	FormMatrix r = form_matrix_zero(c.rank);
	for (int i = 0; i < c.rank; ++i)
		for (int j = 0; j < c.rank; ++j)
			r[i][j] = d_eq(kappa[i][j]) - commutator[i][j];
	return r;
}

FormMatrix invariance_defect(const Connection &c)
{
	FormMatrix r = form_matrix_zero(c.rank);
	FormMatrix ell_theta = form_matrix_zero(c.rank);
	FormMatrix theta_ell = form_matrix_zero(c.rank);
	for (int i = 0; i < c.rank; ++i)
		for (int j = 0; j < c.rank; ++j)
			for (int k = 0; k < c.rank; ++k) {
				ell_theta[i][j] += c.theta[k][j] * c.ell[i][k];
				theta_ell[i][j] += c.theta[i][k] * c.ell[k][j];
			}
	for (int i = 0; i < c.rank; ++i)
		for (int j = 0; j < c.rank; ++j) {
			// Cartan formula with the formal X contraction
			EquivariantForm lie = exterior_derivative(contract_x(c.theta[i][j])) +
			                      contract_x(exterior_derivative(c.theta[i][j]));
			r[i][j] = lie + ell_theta[i][j] - theta_ell[i][j];
		}
	return r;
}

std::vector<EquivariantForm> apply_to_section(const Connection &c,
                                              const std::vector<RationalCoefficient> &coeffs)
{
	if (int(coeffs.size()) != c.rank)
		throw std::invalid_argument("apply_to_section: wrong number of coefficients");
	std::vector<EquivariantForm> r;
	r.reserve(c.rank);
	for (int j = 0; j < c.rank; ++j) {
		EquivariantForm fj(c.rank);
		// d f_j  (the coefficient differential of a 0-form)
		fj += exterior_derivative(EquivariantForm::scalar(c.rank, coeffs[j]));
		for (int i = 0; i < c.rank; ++i)
			fj += c.theta[j][i] * coeffs[i];
		r.push_back(std::move(fj));
	}
	return r;
}

Connection affine_combination(const std::vector<std::pair<RationalCoefficient, Connection>> &parts)
{
	if (parts.empty())
		throw std::invalid_argument("affine_combination: empty");
	int rank = parts[0].second.rank;
	RationalCoefficient weight_sum(rank, 0);
	for (const auto &[w, conn] : parts) {
		if (conn.rank != rank)
			throw std::invalid_argument("affine_combination: rank mismatch");
		if (conn.ell != parts[0].second.ell)
			throw std::invalid_argument("affine_combination: ell matrices differ");
		weight_sum += w;
	}
	if (weight_sum != RationalCoefficient(rank, 1))
		throw std::invalid_argument("affine_combination: weights must sum to one");
	FormMatrix theta = form_matrix_zero(rank);
	for (const auto &[w, conn] : parts)
		for (int i = 0; i < rank; ++i)
			for (int j = 0; j < rank; ++j)
				theta[i][j] += conn.theta[i][j] * w;
	return Connection(rank, std::move(theta), parts[0].second.ell);
}

} // namespace equithom
