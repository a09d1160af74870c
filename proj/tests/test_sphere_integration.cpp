#include "equithom/bm_kernel.hpp"
#include "equithom/sampling.hpp"
#include "equithom/sphere_integration.hpp"

#include <doctest.h>

#include <cmath>

using namespace equithom;

TEST_CASE("moment table")
{
	// vol(S^{2l-1}) = 2 pi^l / (l-1)!
	CHECK(sphere_moment({0}, 1) == Scalar::pi_power(1, GaussRational(Rational(2))));
	CHECK(sphere_moment({0, 0}, 2) == Scalar::pi_power(2, GaussRational(Rational(2))));

	// int_{S^3} |z1|^2 = pi^2, and summing over j recovers vol(S^3)
	CHECK(sphere_moment({1, 0}, 2) == Scalar::pi_power(2, GaussRational(Rational(1))));
	Scalar sum = sphere_moment({1, 0}, 2) + sphere_moment({0, 1}, 2);
	CHECK(sum == sphere_moment({0, 0}, 2));

	// int_{S^3} |z1|^2 |z2|^2 = 2 pi^2 / 3! = pi^2/3
	CHECK(sphere_moment({1, 1}, 2) == Scalar::pi_power(2, GaussRational(Rational(1, 3))));
}

TEST_CASE("exact integral of the kernel is one")
{
	for (int l = 1; l <= 3; ++l) {
		auto top = beta_eq(l).top_form_degree_piece();
		CHECK(sphere_integrate_exact(top) == RationalCoefficient(l, 1));
	}
}

TEST_CASE("degree guard")
{
	int l = 2;
	auto beta = beta_eq(l);
	// the X-linear stratum has form degree 1 < 3: rejected by the guard
	auto linear = beta - beta.set_x_zero();
	CHECK_THROWS_AS(sphere_integrate_exact(linear), std::invalid_argument);
	// the lenient path integrates it to exactly zero
	CHECK(sphere_integrate_exact_any_degree(linear).is_zero());
	// dt generators are rejected
	EquivariantForm with_dt = EquivariantForm::generator(l, {GenKind::dt, 1}, 1);
	CHECK_THROWS_AS(sphere_integrate_exact(with_dt), std::invalid_argument);
}

TEST_CASE("Stokes: exact integral of an exact top form vanishes")
{
	Rng rng(51);
	for (int l = 1; l <= 2; ++l)
		for (int n = 0; n < 10; ++n) {
			// d of a polynomial (2l-2)-form integrates to zero
			auto w = random_equivariant_form(l, 2 * l - 2, rng, false)
			             .form_degree_piece(2 * l - 2);
			auto dw = exterior_derivative(w);
			CHECK(sphere_integrate_exact_any_degree(dw).is_zero());
		}
}

TEST_CASE("X monomials pass through the exact integrator linearly")
{
	int l = 2;
	// (X11 zb1 dz1 - X11 zb1 dz1) wedge machinery: integrate X11 * top form
	auto top = beta_eq(l).top_form_degree_piece();
	auto scaled = top * RationalCoefficient(l, Polynomial::variable(x_var(1, 2)));
	CHECK(sphere_integrate_exact(scaled) ==
	      RationalCoefficient(l, Polynomial::variable(x_var(1, 2))));
}

TEST_CASE("ball integration")
{
	int l = 2;
	GenMask top = (GenMask(1) << (2 * l)) - 1;

	// the sorted generator top form is dz1^dz2^dzb1^dzb2 =
	// (-1)^{l(l-1)/2} (-2i)^l dVol = 4 dVol at rank two, so integrating it
	// over the unit ball gives 4 vol(B^4) = 2 pi^2
	EquivariantForm w(l);
	w.add_term(top, RationalCoefficient(l, 1));
	CHECK(ball_integrate_exact(w) ==
	      RationalCoefficient(l, Polynomial(Scalar::pi_power(2, GaussRational(Rational(2))))));

	// |z1|^2 against the same top form: 4 * int_B |z1|^2 = 4 pi^2/6
	EquivariantForm w2(l);
	w2.add_term(top, RationalCoefficient(l, Polynomial::variable(z_var(1)) *
	                                            Polynomial::variable(zb_var(1))));
	CHECK(ball_integrate_exact(w2) ==
	      RationalCoefficient(
	          l, Polynomial(Scalar::pi_power(2, GaussRational(Rational(2, 3))))));

	// unmatched z / zb exponents integrate to zero
	EquivariantForm w3(l);
	w3.add_term(top, RationalCoefficient(l, Polynomial::variable(z_var(1))));
	CHECK(ball_integrate_exact(w3).is_zero());

	// singular integrands are rejected
	EquivariantForm singular(l);
	singular.add_term(top, RationalCoefficient(l, Polynomial(1), 1));
	CHECK_THROWS_AS(ball_integrate_exact(singular), std::domain_error);
}

TEST_CASE("Monte Carlo agrees with the exact path")
{
	// rank 1, 1e5 samples
	{
		auto top = beta_eq(1).top_form_degree_piece();
		auto est = sphere_integrate_mc(top, 100000, 12345);
		CHECK(std::abs(est.value - std::complex<double>(1, 0)) < 3 * est.stderr_1sigma + 1e-9);
	}
	// rank 2, modest sample count for the unit suite
	{
		auto top = beta_eq(2).top_form_degree_piece();
		auto est = sphere_integrate_mc(top, 200000, 999);
		CHECK(std::abs(est.value - std::complex<double>(1, 0)) < 3 * est.stderr_1sigma + 1e-9);
	}
	// rank 3: the module contract covers l <= 3
	{
		auto top = beta_eq(3).top_form_degree_piece();
		auto est = sphere_integrate_mc(top, 60000, 4242);
		CHECK(std::abs(est.value - std::complex<double>(1, 0)) < 3 * est.stderr_1sigma + 1e-9);
	}
	// zero form integrates to exactly zero
	auto zero_est = sphere_integrate_mc(EquivariantForm::zero(2), 1000, 7);
	CHECK(zero_est.value == std::complex<double>(0, 0));
	CHECK_THROWS_AS(sphere_integrate_mc(EquivariantForm::zero(2), 0, 7),
	                std::invalid_argument);
}

TEST_CASE("Monte Carlo agrees with the exact path on random forms")
{
	// unstructured numerators with sigma denominators exercise the whole
	// moment table, not just the kernel's very regular coefficients
	Rng rng(52);
	int l = 2;
	int tested = 0;
	for (int n = 0; n < 12 && tested < 4; ++n) {
		auto w = random_equivariant_form(l, 2 * l - 1, rng, true)
		             .set_x_zero()
		             .form_degree_piece(2 * l - 1);
		if (w.is_zero())
			continue;
		++tested;
		auto exact = sphere_integrate_exact(w);
		std::complex<double> target =
		    exact.is_zero() ? 0.0 : exact.eval({}, nullptr, M_PI);
		auto est = sphere_integrate_mc(w, 40000, 1000 + n);
		CHECK(std::abs(est.value - target) < 4 * est.stderr_1sigma + 1e-9);
	}
	CHECK(tested >= 3);
}

TEST_CASE("Monte Carlo streams are deterministic per seed")
{
	auto top = beta_eq(1).top_form_degree_piece();
	auto a = sphere_integrate_mc(top, 20000, 42);
	auto b = sphere_integrate_mc(top, 20000, 42);
	CHECK(a.value == b.value);
	CHECK(a.stderr_1sigma == b.stderr_1sigma);
	auto c = sphere_integrate_mc(top, 20000, 43);
	CHECK(a.value != c.value);
}

TEST_CASE("projection formula over the honeycomb")
{
	// pi_*(alpha cup pi^* beta) = pi_* alpha * beta for constant beta
	for (int l = 1; l <= 2; ++l) {
		CechTriple t = thom_cocycle(l);
		CHECK(projection_formula_check(t, Scalar(5)).is_zero());
		CHECK(projection_formula_check(t, Scalar::i_over_two_pi(1)).is_zero());
		// the full fiber integral of the Thom cocycle is 1
		CHECK(fiber_integrate_triple(t) == RationalCoefficient(l, 1));
	}
	// triple with zero angular part integrates through the ball part only
	int l = 1;
	CechTriple flat(EquivariantForm::zero(l), EquivariantForm::unit(l),
	                EquivariantForm::zero(l), 0);
	CHECK(projection_formula_check(flat, Scalar(3)).is_zero());
}
