#include "equithom/sampling.hpp"

namespace equithom {

uint64_t Rng::next()
{
	state_ += 0x9e3779b97f4a7c15ull;
	uint64_t x = state_;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
	return x ^ (x >> 31);
}

int Rng::uniform_int(int lo, int hi)
{
	return lo + int(next() % uint64_t(hi - lo + 1));
}

Rational Rng::small_rational(int bound)
{
	int num = 0;
	while (num == 0)
		num = uniform_int(-bound, bound);
	int den = uniform_int(1, 2);
	return Rational(num, den);
}

GaussRational Rng::small_gauss(int bound)
{
	GaussRational g(small_rational(bound));
	if (uniform_int(0, 2) == 0)
		g.im = small_rational(bound);
	return g;
}

namespace {

// the four invariant matrix-valued one-form families (weights attached by
// the caller); exponent a >= -1 is the sigma power
FormMatrix invariant_basis_matrix(int rank, int family, int sigma_exp)
{
	FormMatrix m = form_matrix_zero(rank);
	auto sigma_coeff = [&](Polynomial p) {
		if (sigma_exp >= 1)
			for (int k = 0; k < sigma_exp; ++k)
				p *= sigma_polynomial(rank);
		return RationalCoefficient(rank, std::move(p), sigma_exp < 0 ? -sigma_exp : 0);
	};
	for (int i = 1; i <= rank; ++i)
		for (int j = 1; j <= rank; ++j) {
			EquivariantForm &e = m[i - 1][j - 1];
			switch (family) {
			case 0: // zb_j dz_i
				e = EquivariantForm::generator(rank, {GenKind::dz, i}) *
				    sigma_coeff(Polynomial::variable(zb_var(j)));
				break;
			case 1: // z_i dzb_j
				e = EquivariantForm::generator(rank, {GenKind::dzb, j}) *
				    sigma_coeff(Polynomial::variable(z_var(i)));
				break;
			case 2: // delta_ij sum_k zb_k dz_k
				if (i == j)
					for (int k = 1; k <= rank; ++k)
						e += EquivariantForm::generator(rank, {GenKind::dz, k}) *
						     sigma_coeff(Polynomial::variable(zb_var(k)));
				break;
			case 3: // delta_ij sum_k z_k dzb_k
				if (i == j)
					for (int k = 1; k <= rank; ++k)
						e += EquivariantForm::generator(rank, {GenKind::dzb, k}) *
						     sigma_coeff(Polynomial::variable(z_var(k)));
				break;
			}
		}
	return m;
}

} // namespace

Connection random_invariant_connection(int rank, Rng &rng, bool allow_denominators)
{
	Connection c = builtin_d1(rank);
	int pieces = rng.uniform_int(1, 3);
	for (int n = 0; n < pieces; ++n) {
		int family = rng.uniform_int(0, 3);
		int sigma_exp = allow_denominators ? rng.uniform_int(-1, 1) : rng.uniform_int(0, 1);
		Scalar w(rng.small_gauss());
		FormMatrix basis = invariant_basis_matrix(rank, family, sigma_exp);
		for (int i = 0; i < rank; ++i)
			for (int j = 0; j < rank; ++j)
				c.theta[i][j] += basis[i][j] * w;
	}
	return c;
}

Connection random_arbitrary_connection(int rank, Rng &rng)
{
	Connection c = builtin_d1(rank);
	for (int i = 0; i < rank; ++i)
		for (int j = 0; j < rank; ++j) {
			// a couple of random polynomial one-form terms per entry
			int pieces = rng.uniform_int(1, 2);
			for (int n = 0; n < pieces; ++n) {
				GenKind kind = rng.uniform_int(0, 1) ? GenKind::dz : GenKind::dzb;
				int idx = rng.uniform_int(1, rank);
				Polynomial p(Scalar(rng.small_gauss()));
				int deg = rng.uniform_int(0, 2);
				for (int d = 0; d < deg; ++d) {
					Var v = rng.uniform_int(0, 1) ? z_var(rng.uniform_int(1, rank))
					                              : zb_var(rng.uniform_int(1, rank));
					p *= Polynomial::variable(v);
				}
				c.theta[i][j] += EquivariantForm::generator(rank, {kind, idx}) *
				                 RationalCoefficient(rank, p);
			}
		}
	return c;
}

std::vector<EquivariantForm> equivariant_pool(int rank)
{
	int l = rank;
	std::vector<EquivariantForm> pool;

	// degree 1: d sigma components sum zb_k dz_k and sum z_k dzb_k
	EquivariantForm del(l), delbar(l);
	for (int k = 1; k <= l; ++k) {
		del += EquivariantForm::generator(l, {GenKind::dz, k}) *
		       RationalCoefficient(l, Polynomial::variable(zb_var(k)));
		delbar += EquivariantForm::generator(l, {GenKind::dzb, k}) *
		          RationalCoefficient(l, Polynomial::variable(z_var(k)));
	}
	pool.push_back(del);
	pool.push_back(delbar);

	// degree 2: tr X, zb^T X z, sum dzb_k ^ dz_k; degree 4: X-weighted
	// two-form sum X_ik dzb_i ^ dz_k (pool-invariance coverage only)
	Polynomial tr, quad;
	EquivariantForm omega(l), omega_x(l);
	for (int i = 1; i <= l; ++i) {
		tr += Polynomial::variable(x_var(i, i));
		for (int k = 1; k <= l; ++k) {
			quad += Polynomial::variable(zb_var(i)) * Polynomial::variable(x_var(i, k)) *
			        Polynomial::variable(z_var(k));
			omega_x += wedge(EquivariantForm::generator(l, {GenKind::dzb, i}),
			                 EquivariantForm::generator(l, {GenKind::dz, k})) *
			           RationalCoefficient(l, Polynomial::variable(x_var(i, k)));
		}
		omega += wedge(EquivariantForm::generator(l, {GenKind::dzb, i}),
		               EquivariantForm::generator(l, {GenKind::dz, i}));
	}
	pool.push_back(EquivariantForm::scalar(l, RationalCoefficient(l, tr)));
	pool.push_back(EquivariantForm::scalar(l, RationalCoefficient(l, quad)));
	pool.push_back(omega);
	pool.push_back(omega_x);

	// degree 3: zb^T X dz and (X z)^T dzb
	EquivariantForm wx(l), wxbar(l);
	for (int i = 1; i <= l; ++i)
		for (int k = 1; k <= l; ++k) {
			wx += EquivariantForm::generator(l, {GenKind::dz, k}) *
			      RationalCoefficient(l, Polynomial::variable(zb_var(i)) *
			                                 Polynomial::variable(x_var(i, k)));
			wxbar += EquivariantForm::generator(l, {GenKind::dzb, i}) *
			         RationalCoefficient(l, Polynomial::variable(x_var(i, k)) *
			                                    Polynomial::variable(z_var(k)));
		}
	pool.push_back(wx);
	pool.push_back(wxbar);
	return pool;
}

EquivariantForm random_equivariant_form(int rank, int total_degree, Rng &rng,
                                        bool allow_denominators)
{
	auto pool = equivariant_pool(rank);
	std::vector<std::vector<const EquivariantForm *>> by_degree(4);
	for (const auto &f : pool) {
		int d = f.max_form_degree() + 2 * f.terms().begin()->second.numerator().degree_in_kind(
		                                      VarKind::X);
		if (d >= 1 && d <= 3)
			by_degree[d].push_back(&f);
	}

	EquivariantForm total(rank);
	int summands = rng.uniform_int(1, 3);
	for (int n = 0; n < summands; ++n) {
		EquivariantForm term = EquivariantForm::unit(rank);
		int remaining = total_degree;
		while (remaining > 0 && !term.is_zero()) {
			int d = rng.uniform_int(1, std::min(remaining, 3));
			const EquivariantForm &piece =
			    *by_degree[d][rng.uniform_int(0, int(by_degree[d].size()) - 1)];
			term = wedge(term, piece);
			remaining -= d;
		}
		if (term.is_zero())
			continue;
		Scalar w(rng.small_gauss());
		term = term * w;
		if (allow_denominators && rng.uniform_int(0, 1) == 1)
			term = term * RationalCoefficient(rank, Polynomial(1), 1);
		// multiplying by sigma keeps equivariance and varies the numerators
		if (rng.uniform_int(0, 2) == 0)
			term = term * RationalCoefficient(rank, sigma_polynomial(rank));
		total += term;
	}
	return total;
}

CechTriple random_cech_triple(int rank, int degree, Rng &rng)
{
	EquivariantForm xi0 = random_equivariant_form(rank, degree, rng, true);
	EquivariantForm xi1 = random_equivariant_form(rank, degree, rng, false);
	EquivariantForm xi01 = degree >= 1
	                           ? random_equivariant_form(rank, degree - 1, rng, true)
	                           : EquivariantForm::zero(rank);
	return CechTriple(std::move(xi0), std::move(xi1), std::move(xi01), degree);
}

} // namespace equithom
