#include "equithom/coefficient.hpp"
#include "equithom/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace equithom;

namespace {

RationalCoefficient rc(int rank, const Polynomial &p, int m = 0)
{
	return RationalCoefficient(rank, p, m);
}

Polynomial v(Var var) { return Polynomial::variable(var); }

RationalCoefficient random_coefficient(int rank, Rng &rng)
{
	Polynomial p;
	int terms = rng.uniform_int(1, 3);
	for (int t = 0; t < terms; ++t) {
		Monomial m;
		int factors = rng.uniform_int(0, 3);
		for (int f = 0; f < factors; ++f) {
			int which = rng.uniform_int(0, 2);
			Var var = which == 0   ? z_var(rng.uniform_int(1, rank))
			          : which == 1 ? zb_var(rng.uniform_int(1, rank))
			                       : x_var(rng.uniform_int(1, rank), rng.uniform_int(1, rank));
			m = mono_mul(m, Monomial{{var, 1}});
		}
		Polynomial term;
		term.add_term(m, Scalar::pi_power(rng.uniform_int(-1, 1), rng.small_gauss()));
		p += term;
	}
	return RationalCoefficient(rank, p, rng.uniform_int(0, 2));
}

} // namespace

TEST_CASE("scalar arithmetic and the i/(2 pi) constant")
{
	Scalar half_i_over_pi = Scalar::i_over_two_pi(1);
	CHECK(half_i_over_pi ==
	      Scalar::pi_power(-1, GaussRational(Rational(0), Rational(1, 2))));

	// (i/2 pi^-1)^2 = -1/4 pi^-2
	CHECK(half_i_over_pi * half_i_over_pi ==
	      Scalar::pi_power(-2, GaussRational(Rational(-1, 4))));

	CHECK(Scalar(2) + Scalar(-2) == Scalar(0));
	CHECK((Scalar(1) - Scalar(1)).is_zero());

	auto val = half_i_over_pi.eval(M_PI);
	CHECK(std::abs(val - std::complex<double>(0, 0.5 / M_PI)) < 1e-15);
}

TEST_CASE("coefficient addition cancels sigma factors")
{
	int l = 2;
	// zb1/sigma + zb1*sigma/sigma^2 = 2 zb1/sigma
	auto a = rc(l, v(zb_var(1)), 1);
	auto b = rc(l, v(zb_var(1)) * sigma_polynomial(l), 2);
	CHECK(b == a); // canonicalization already cancels
	CHECK(a + b == rc(l, v(zb_var(1)) * Scalar(2), 1));

	CHECK((rc(l, v(z_var(1))) + rc(l, -v(z_var(1)))).is_zero());

	auto c = rc(l, v(z_var(1)) * Scalar::i_over_two_pi(1));
	CHECK(c + c == rc(l, v(z_var(1)) * Scalar::pi_power(-1, GaussRational::unit_i())));
}

TEST_CASE("coefficient multiplication and canonical form")
{
	int l = 2;
	CHECK(rc(l, Polynomial(Scalar::i_over_two_pi(1))) * rc(l, Polynomial(Scalar::i_over_two_pi(1))) ==
	      rc(l, Polynomial(Scalar::pi_power(-2, GaussRational(Rational(-1, 4))))));

	// zb1/sigma * z1/sigma = z1 zb1 / sigma^2 (not divisible for l = 2)
	auto prod = rc(l, v(zb_var(1)), 1) * rc(l, v(z_var(1)), 1);
	CHECK(prod == rc(l, v(z_var(1)) * v(zb_var(1)), 2));
	CHECK(prod.denom_exp() == 2);

	// sigma/sigma canonicalizes away entirely
	CHECK(rc(l, sigma_polynomial(l), 1) == rc(l, Polynomial(1)));
	CHECK(rc(l, sigma_polynomial(l), 1) * rc(l, Polynomial(1)) == rc(l, Polynomial(1)));

	// rank one: z1 zb1 IS sigma
	CHECK(rc(1, Polynomial::variable(z_var(1)) * Polynomial::variable(zb_var(1)), 1) ==
	      rc(1, Polynomial(1)));
}

TEST_CASE("numeric evaluation")
{
	int l = 2;
	auto other = std::function<std::complex<double>(Var)>{};

	// zb1/sigma at z = (1, 0) -> 1
	auto a = rc(l, v(zb_var(1)), 1);
	CHECK(std::abs(a.eval({{1, 0}, {0, 0}}, other, M_PI) - 1.0) < 1e-15);

	// z1 zb2 / sigma at z = (i, 1) -> i/2
	auto b = rc(l, v(z_var(1)) * v(zb_var(2)), 1);
	auto got = b.eval({{0, 1}, {1, 0}}, other, M_PI);
	CHECK(std::abs(got - std::complex<double>(0, 0.5)) < 1e-15);

	// |z| = 0 with a denominator must signal
	CHECK_THROWS_AS(a.eval({{0, 0}, {0, 0}}, other, M_PI), std::domain_error);
}

TEST_CASE("ring axioms on randomized coefficients")
{
	int l = 2;
	Rng rng(777);
	for (int n = 0; n < 40; ++n) {
		auto a = random_coefficient(l, rng);
		auto b = random_coefficient(l, rng);
		auto c = random_coefficient(l, rng);
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("cross-multiplication equality agrees with canonical equality")
{
	int l = 2;
	Rng rng(778);
	for (int n = 0; n < 40; ++n) {
		auto a = random_coefficient(l, rng);
		auto b = random_coefficient(l, rng);
		CHECK(a.equals_cross(a));
		CHECK(a.equals_cross(b) == (a == b));
		// an uncancelled representative of a equals a under both notions
		auto blown = RationalCoefficient(l, a.numerator() * sigma_polynomial(l),
		                                 a.denom_exp() + 1);
		CHECK(blown == a);
		CHECK(blown.equals_cross(a));
	}
}

TEST_CASE("numeric evaluation is a ring homomorphism")
{
	int l = 2;
	Rng rng(779);
	auto other = [](Var var) -> std::complex<double> {
		// arbitrary but fixed values for the X entries
		return {0.25 * double(var_a(var)), -0.125 * double(var_b(var))};
	};
	std::vector<std::complex<double>> z = {{0.8, -0.3}, {0.5, 1.1}};
	for (int n = 0; n < 30; ++n) {
		auto a = random_coefficient(l, rng);
		auto b = random_coefficient(l, rng);
		auto va = a.eval(z, other, M_PI), vb = b.eval(z, other, M_PI);
		auto vsum = (a + b).eval(z, other, M_PI);
		auto vprod = (a * b).eval(z, other, M_PI);
		CHECK(std::abs(vsum - (va + vb)) <= 1e-12 * (1 + std::abs(va) + std::abs(vb)));
		CHECK(std::abs(vprod - va * vb) <= 1e-12 * (1 + std::abs(va * vb)));
	}
}

TEST_CASE("exact division by sigma")
{
	int l = 3;
	Rng rng(781);
	Polynomial sigma = sigma_polynomial(l);
	for (int n = 0; n < 25; ++n) {
		Polynomial p = random_coefficient(l, rng).numerator();
		if (p.is_zero())
			continue;
		auto q = (p * sigma).divide_exact(sigma);
		REQUIRE(q.has_value());
		CHECK(*q == p);
		// p * sigma + 1 is never divisible by sigma
		Polynomial off = p * sigma + Polynomial(1);
		CHECK(!off.divide_exact(sigma).has_value());
	}
}

TEST_CASE("canonicalize is idempotent")
{
	int l = 3;
	Rng rng(780);
	for (int n = 0; n < 20; ++n) {
		auto a = random_coefficient(l, rng);
		auto again = RationalCoefficient(l, a.numerator(), a.denom_exp());
		CHECK(again == a);
	}
}
