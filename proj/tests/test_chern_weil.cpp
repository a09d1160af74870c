#include "equithom/bm_kernel.hpp"
#include "equithom/chern_weil.hpp"
#include "equithom/sampling.hpp"

#include <doctest.h>

#include <bit>

using namespace equithom;

TEST_CASE("total Chern form pieces of the flat-frame connection")
{
	// c^l(D^1) = (i/2pi)^l det X = chi_eq
	for (int l = 1; l <= 3; ++l)
		CHECK(chern_form(builtin_d1(l), l) == chi_eq(l));

	// c^0 = 1 always
	CHECK(chern_form(builtin_d0(2), 0) == EquivariantForm::unit(2));

	CHECK_THROWS_AS(chern_form(builtin_d1(2), 3), std::invalid_argument);
	CHECK_THROWS_AS(chern_form(builtin_d1(2), -1), std::invalid_argument);
}

TEST_CASE("interpolated family: vertices and endpoint consistency")
{
	for (int l = 1; l <= 2; ++l) {
		SimplexFamily family({builtin_d0(l), builtin_d1(l)});
		FormMatrix tilde = family.tilde_theta();
		FormMatrix kappa = family.tilde_curvature();
		auto d0 = builtin_d0(l), d1 = builtin_d1(l);
		for (int i = 0; i < l; ++i)
			for (int j = 0; j < l; ++j) {
				// vertex reproduction of the interpolation
				CHECK(tilde[i][j].substitute_t(1, Scalar(0)) ==
				      d0.theta[i][j].with_simplex_dim(1));
				CHECK(tilde[i][j].substitute_t(1, Scalar(1)) ==
				      d1.theta[i][j].with_simplex_dim(1));
				// the dt-free part of kappa-tilde at t = 0 is kappa(D^0)
				EquivariantForm dt_part(l, 1);
				for (const auto &[mask, c] : kappa[i][j].terms())
					if (kappa[i][j].mask_has_dt(mask))
						dt_part.add_term(mask, c);
				CHECK((kappa[i][j] - dt_part).substitute_t(1, Scalar(0)) ==
				      curvature(d0)[i][j].with_simplex_dim(1));
			}
	}
}

TEST_CASE("SimplexFamily validation")
{
	CHECK_THROWS_AS(SimplexFamily({}), std::invalid_argument);
	CHECK_THROWS_AS(SimplexFamily({builtin_d0(1), builtin_d1(2)}), std::invalid_argument);
	// mismatched ell matrices are rejected
	Connection odd = builtin_d1(2);
	odd.ell[0][0] = RationalCoefficient(2, Polynomial::variable(x_var(2, 2)));
	CHECK_THROWS_AS(SimplexFamily({builtin_d1(2), odd}), std::invalid_argument);
}

TEST_CASE("transgression of the built-in pair")
{
	// rank one: the original kernel
	auto diff = bott_difference(SimplexFamily({builtin_d0(1), builtin_d1(1)}), 1);
	auto expected = EquivariantForm::generator(1, {GenKind::dz, 1}) *
	                RationalCoefficient(1, Polynomial::variable(zb_var(1)), 1) *
	                Scalar::i_over_two_pi(1);
	CHECK(diff == expected);

	// equal entries give zero
	for (int k = 1; k <= 2; ++k)
		CHECK(bott_difference(SimplexFamily({builtin_d1(2), builtin_d1(2)}), k).is_zero());

	// rank two: the six-term kernel (checked in full against beta_eq)
	CHECK(bott_difference(SimplexFamily({builtin_d0(2), builtin_d1(2)}), 2) == beta_eq(2));
}

TEST_CASE("transgression degree bookkeeping")
{
	// c^k(nabla0, nabla1) has total degree 2k - 1
	Rng rng(31);
	for (int l = 1; l <= 2; ++l)
		for (int k = 1; k <= l; ++k) {
			auto f = bott_difference(
			    SimplexFamily({random_invariant_connection(l, rng), builtin_d1(l)}), k);
			for (const auto &[mask, c] : f.terms()) {
				int form_deg = std::popcount(mask);
				for (const auto &[mono, coeff] : c.numerator().terms())
					CHECK(form_deg + 2 * mono_degree(mono, VarKind::X) == 2 * k - 1);
			}
		}
}

TEST_CASE("cocycle relation for the built-in pair")
{
	// c^l(D^1) - c^l(D^0) - d_eq c^l(D^0, D^1) = 0
	for (int l = 1; l <= 3; ++l) {
		CHECK(bott_cocycle_defect(SimplexFamily({builtin_d0(l), builtin_d1(l)}), l).is_zero());
		// and for the trivial triple
		CHECK(bott_cocycle_defect(SimplexFamily({builtin_d1(l), builtin_d1(l), builtin_d1(l)}),
		                          l)
		          .is_zero());
	}
}

TEST_CASE("cocycle relation for randomized invariant families")
{
	Rng rng(32);
	for (int l = 1; l <= 2; ++l)
		for (int p = 1; p <= 2; ++p)
			for (int n = 0; n < 3; ++n) {
				std::vector<Connection> fam;
				for (int m = 0; m <= p; ++m)
					fam.push_back(random_invariant_connection(l, rng));
				for (int k = 1; k <= l; ++k)
					CHECK(bott_cocycle_defect(SimplexFamily(fam), k).is_zero());
			}
}

TEST_CASE("alternating in the entries")
{
	Rng rng(33);
	for (int l = 1; l <= 2; ++l)
		for (int n = 0; n < 4; ++n) {
			Connection a = random_invariant_connection(l, rng);
			Connection b = random_invariant_connection(l, rng);
			Connection c = random_invariant_connection(l, rng);
			for (int k = 1; k <= l; ++k) {
				CHECK((bott_difference(SimplexFamily({a, b}), k) +
				       bott_difference(SimplexFamily({b, a}), k))
				          .is_zero());
				// adjacent swap on a triple
				CHECK((bott_difference(SimplexFamily({a, b, c}), k) +
				       bott_difference(SimplexFamily({a, c, b}), k))
				          .is_zero());
				// and the outer swap
				CHECK((bott_difference(SimplexFamily({a, b, c}), k) +
				       bott_difference(SimplexFamily({c, b, a}), k))
				          .is_zero());
			}
		}
}

TEST_CASE("simplex integration moments")
{
	// int_{Delta^2} t1^2 t2 = 2! 1! / (2 + 3)! = 1/60
	EquivariantForm w(1, 2);
	GenMask dt12 = (GenMask(1) << 2) | (GenMask(1) << 3); // rank 1: dt bits at 2, 3
	Polynomial t1sq = Polynomial::variable(t_var(1)) * Polynomial::variable(t_var(1)) *
	                  Polynomial::variable(t_var(2));
	w.add_term(dt12, RationalCoefficient(1, t1sq));
	auto r = integrate_over_simplex(w, 2);
	CHECK(r == EquivariantForm::scalar(1, RationalCoefficient(1, Scalar(Rational(1, 60)))));

	// terms missing a dt direction integrate to zero
	EquivariantForm partial(1, 2);
	partial.add_term(GenMask(1) << 2, RationalCoefficient(1, 1));
	CHECK(integrate_over_simplex(partial, 2).is_zero());
}
