#include "equithom/chern_weil.hpp"

#include <algorithm>
#include <bit>

namespace equithom {

SimplexFamily::SimplexFamily(std::vector<Connection> conns) : connections(std::move(conns))
{
	if (connections.empty())
		throw std::invalid_argument("SimplexFamily: empty family");
	for (const auto &c : connections) {
		if (c.rank != connections[0].rank)
			throw std::invalid_argument("SimplexFamily: rank mismatch");
		if (c.ell != connections[0].ell)
			throw std::invalid_argument("SimplexFamily: ell matrices must agree");
	}
}

FormMatrix SimplexFamily::tilde_theta() const
{
	int l = rank();
	int p = simplex_dim();
	FormMatrix r = form_matrix_zero(l, p);
	for (int i = 0; i < l; ++i)
		for (int j = 0; j < l; ++j) {
			r[i][j] += connections[0].theta[i][j].with_simplex_dim(p);
			for (int nu = 1; nu <= p; ++nu) {
				auto t = RationalCoefficient(l, Polynomial::variable(t_var(nu)));
				r[i][j] += (connections[nu].theta[i][j] - connections[0].theta[i][j])
				               .with_simplex_dim(p) *
				           t;
			}
		}
	return r;
}

FormMatrix SimplexFamily::tilde_curvature() const
{
	int l = rank();
	int p = simplex_dim();
	FormMatrix th = tilde_theta();
	FormMatrix kappa = form_matrix_mul(th, th);
	for (int i = 0; i < l; ++i)
		for (int j = 0; j < l; ++j) {
			kappa[i][j] += exterior_derivative(th[i][j]);
			kappa[i][j] -= contract_x(th[i][j]);
			kappa[i][j] += EquivariantForm::scalar(l, connections[0].ell[i][j], p);
			for (int nu = 1; nu <= p; ++nu) {
				EquivariantForm dt = EquivariantForm::generator(l, {GenKind::dt, nu}, p);
				kappa[i][j] += wedge(
				    dt, (connections[nu].theta[i][j] - connections[0].theta[i][j])
				            .with_simplex_dim(p));
			}
		}
	return kappa;
}

EquivariantForm principal_minor_sum(const FormMatrix &m, int k)
{
	int n = int(m.size());
	int rank = m[0][0].rank();
	int p = m[0][0].simplex_dim();
	EquivariantForm total(rank, p);
	if (k == 0)
		return EquivariantForm::unit(rank, p);

	// iterate over k-subsets S of {0..n-1}
	std::vector<int> sel(k);
	for (int i = 0; i < k; ++i)
		sel[i] = i;
	while (true) {
		// det of the S x S submatrix by permutation sum; entries commute
		std::vector<int> perm(k);
		for (int i = 0; i < k; ++i)
			perm[i] = i;
		do {
			int inversions = 0;
			for (int i = 0; i < k; ++i)
				for (int j = i + 1; j < k; ++j)
					if (perm[i] > perm[j])
						++inversions;
			EquivariantForm prod = EquivariantForm::unit(rank, p);
			for (int i = 0; i < k && !prod.is_zero(); ++i)
				prod = wedge(prod, m[sel[i]][sel[perm[i]]]);
			total += (inversions % 2 == 0) ? prod : -prod;
		} while (std::next_permutation(perm.begin(), perm.end()));

		// next subset
		int i = k - 1;
		while (i >= 0 && sel[i] == n - k + i)
			--i;
		if (i < 0)
			break;
		++sel[i];
		for (int j = i + 1; j < k; ++j)
			sel[j] = sel[j - 1] + 1;
	}
	return total;
}

EquivariantForm chern_form(const Connection &c, int k)
{
	if (k < 0 || k > c.rank)
		throw std::invalid_argument("chern_form: degree out of range");
	return principal_minor_sum(curvature(c), k) * Scalar::i_over_two_pi(k);
}

EquivariantForm integrate_over_simplex(const EquivariantForm &w, int p)
{
	int l = w.rank();
	if (p < 1)
		throw std::invalid_argument("integrate_over_simplex: p must be >= 1");
	GenMask dt_mask = 0;
	for (int nu = 1; nu <= p; ++nu)
		dt_mask |= GenMask(1) << (2 * l + nu - 1);

	EquivariantForm r(l, 0);
	for (const auto &[mask, c] : w.terms()) {
		if ((mask & dt_mask) != dt_mask)
			continue; // fiber integration kills terms missing a dt
		GenMask rest = mask & ~dt_mask;
		// stored order has the dt block last: moving it to the front of
		// dt_1^...^dt_p ^ (rest) costs (-1)^{p * |rest|}
		int sign = (p * std::popcount(rest)) % 2 == 0 ? 1 : -1;

		// integrate each t-monomial of the coefficient over Delta^p
		Polynomial integrated;
		for (const auto &[mono, coeff] : c.numerator().terms()) {
			Monomial stripped;
			long long total_t = 0;
			Rational moment = 1;
			for (const auto &[v, e] : mono) {
				if (is_t_var(v)) {
					moment *= factorial(unsigned(e));
					total_t += e;
				} else {
					stripped.emplace_back(v, e);
				}
			}
			moment /= factorial(unsigned(p + total_t));
			integrated.add_term(stripped, coeff * Scalar(moment));
		}
		auto rc = RationalCoefficient(l, std::move(integrated), c.denom_exp());
		r.add_term(rest, sign < 0 ? -rc : rc);
	}
	return r;
}

EquivariantForm bott_difference(const SimplexFamily &family, int k)
{
	int l = family.rank();
	if (k < 0 || k > l)
		throw std::invalid_argument("bott_difference: degree out of range");
	int p = family.simplex_dim();
	if (p == 0)
		return chern_form(family.connections[0], k);
	EquivariantForm det_piece = principal_minor_sum(family.tilde_curvature(), k);
	return integrate_over_simplex(det_piece, p) * Scalar::i_over_two_pi(k);
}

EquivariantForm bott_cocycle_defect(const SimplexFamily &family, int k)
{
	int p = family.simplex_dim();
	if (p < 1)
		throw std::invalid_argument("bott_cocycle_defect: need at least two connections");
	EquivariantForm r(family.rank());
	for (int nu = 0; nu <= p; ++nu) {
		std::vector<Connection> sub;
		for (int m = 0; m <= p; ++m)
			if (m != nu)
				sub.push_back(family.connections[m]);
		EquivariantForm phi = bott_difference(SimplexFamily(std::move(sub)), k);
		r += (nu % 2 == 0) ? phi : -phi;
	}
	EquivariantForm dphi = d_eq(bott_difference(family, k));
	r += (p % 2 == 0) ? dphi : -dphi;
	return r;
}

} // namespace equithom
