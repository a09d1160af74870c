#include "equithom/bm_kernel.hpp"
#include "equithom/form.hpp"
#include "equithom/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace equithom;

namespace {

EquivariantForm gen(int l, GenKind k, int i) { return EquivariantForm::generator(l, {k, i}); }

RationalCoefficient mono(int l, std::initializer_list<Var> vars, int denom = 0)
{
	Polynomial p(1);
	for (Var v : vars)
		p *= Polynomial::variable(v);
	return RationalCoefficient(l, p, denom);
}

} // namespace

TEST_CASE("wedge: anticommutativity and the global generator order")
{
	int l = 2;
	// dzb2 ^ dz1 = -(dz1 ^ dzb2)
	CHECK(wedge(gen(l, GenKind::dzb, 2), gen(l, GenKind::dz, 1)) ==
	      -wedge(gen(l, GenKind::dz, 1), gen(l, GenKind::dzb, 2)));
	// dz1 ^ dz1 = 0
	CHECK(wedge(gen(l, GenKind::dz, 1), gen(l, GenKind::dz, 1)).is_zero());
	// (zb1/s) dz1 ^ (zb2/s) dz2 = (zb1 zb2 / s^2) dz1^dz2
	auto a = gen(l, GenKind::dz, 1) * mono(l, {zb_var(1)}, 1);
	auto b = gen(l, GenKind::dz, 2) * mono(l, {zb_var(2)}, 1);
	auto expected =
	    wedge(gen(l, GenKind::dz, 1), gen(l, GenKind::dz, 2)) * mono(l, {zb_var(1), zb_var(2)}, 2);
	CHECK(wedge(a, b) == expected);

	EquivariantForm other_rank(3);
	CHECK_THROWS_AS(wedge(a, other_rank), std::invalid_argument);
}

TEST_CASE("wedge is associative and graded-commutative on random homogeneous forms")
{
	Rng rng(101);
	for (int l = 1; l <= 2; ++l)
		for (int n = 0; n < 15; ++n) {
			int da = rng.uniform_int(0, 2), db = rng.uniform_int(0, 2),
			    dc = rng.uniform_int(0, 2);
			auto a = random_equivariant_form(l, da, rng, true).form_degree_piece(da % (2 * l + 1));
			auto b = random_equivariant_form(l, db, rng, true).form_degree_piece(db % (2 * l + 1));
			auto c = random_equivariant_form(l, dc, rng, true);
			CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
			int sign = (da % (2 * l + 1)) * (db % (2 * l + 1));
			auto ba = wedge(b, a);
			CHECK(wedge(a, b) == (sign % 2 ? -ba : ba));
		}
}

TEST_CASE("exterior derivative: explicit values")
{
	// d((zb1/s) dz1) = d(dz/z) = 0 at rank one
	auto a1 = gen(1, GenKind::dz, 1) * mono(1, {zb_var(1)}, 1);
	CHECK(exterior_derivative(a1).is_zero());

	// rank two: d((zb1/s) dz1) has the three-term expansion
	int l = 2;
	auto a2 = gen(l, GenKind::dz, 1) * mono(l, {zb_var(1)}, 1);
	auto expected = wedge(gen(l, GenKind::dzb, 1), gen(l, GenKind::dz, 1)) *
	                    mono(l, {z_var(2), zb_var(2)}, 2) +
	                wedge(gen(l, GenKind::dz, 1), gen(l, GenKind::dz, 2)) *
	                    mono(l, {zb_var(1), zb_var(2)}, 2) -
	                wedge(gen(l, GenKind::dzb, 2), gen(l, GenKind::dz, 1)) *
	                    mono(l, {zb_var(1), z_var(2)}, 2);
	CHECK(exterior_derivative(a2) == expected);

	// d(z1) = dz1
	auto z1 = EquivariantForm::scalar(l, mono(l, {z_var(1)}));
	CHECK(exterior_derivative(z1) == gen(l, GenKind::dz, 1));
}

TEST_CASE("exterior derivative: d . d = 0 on random forms")
{
	Rng rng(102);
	for (int l = 1; l <= 3; ++l)
		for (int n = 0; n < 10; ++n) {
			auto a = random_equivariant_form(l, rng.uniform_int(0, 3), rng, true);
			CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
		}
}

TEST_CASE("exterior derivative agrees with finite differences")
{
	// d f (v0, v1) = sum_i (-1)^i d/dh f(p + h v_i)(..v_hat_i..)
	int l = 2;
	Rng rng(103);
	auto f = gen(l, GenKind::dz, 1) * mono(l, {zb_var(1)}, 1); // (zb1/s) dz1
	auto df = exterior_derivative(f);
	double h = 1e-5;
	auto x_point = std::function<std::complex<double>(Var)>{};
	for (int trial = 0; trial < 20; ++trial) {
		std::vector<std::complex<double>> p(l), v0(l), v1(l);
		auto rnd = [&] { return 2.0 * (double(rng.next() >> 11) * 0x1.0p-53) - 1.0; };
		for (int i = 0; i < l; ++i) {
			p[i] = {rnd() + 2.0, rnd()}; // stay away from z = 0
			v0[i] = {rnd(), rnd()};
			v1[i] = {rnd(), rnd()};
		}
		auto shift = [&](const std::vector<std::complex<double>> &dir, double step) {
			auto q = p;
			for (int i = 0; i < l; ++i)
				q[i] += step * dir[i];
			return q;
		};
		std::vector<std::vector<std::complex<double>>> fr0 = {v1}, fr1 = {v0};
		auto d0 = (eval_on_frame(f, shift(v0, h), fr0, x_point, M_PI) -
		           eval_on_frame(f, shift(v0, -h), fr0, x_point, M_PI)) /
		          (2 * h);
		auto d1 = (eval_on_frame(f, shift(v1, h), fr1, x_point, M_PI) -
		           eval_on_frame(f, shift(v1, -h), fr1, x_point, M_PI)) /
		          (2 * h);
		std::vector<std::vector<std::complex<double>>> fr01 = {v0, v1};
		auto exact = eval_on_frame(df, p, fr01, x_point, M_PI);
		CHECK(std::abs(exact - (d0 - d1)) < 1e-8);
	}
}

TEST_CASE("contraction with the formal X field")
{
	int l = 2;
	// i_X dz1 = -(X11 z1 + X12 z2)
	Polynomial expected = -(Polynomial::variable(x_var(1, 1)) * Polynomial::variable(z_var(1)) +
	                        Polynomial::variable(x_var(1, 2)) * Polynomial::variable(z_var(2)));
	CHECK(contract_x(gen(l, GenKind::dz, 1)) ==
	      EquivariantForm::scalar(l, RationalCoefficient(l, expected)));

	// contraction kills 0-forms
	CHECK(contract_x(EquivariantForm::scalar(l, mono(l, {z_var(1)}))).is_zero());

	// derivation rule on dz1 ^ dzb1
	auto d1 = gen(l, GenKind::dz, 1), db1 = gen(l, GenKind::dzb, 1);
	auto lhs = contract_x(wedge(d1, db1));
	auto rhs = wedge(contract_x(d1), db1) - wedge(d1, contract_x(db1));
	CHECK(lhs == rhs);
}

TEST_CASE("d and i_X are graded derivations over wedge")
{
	Rng rng(104);
	int l = 2;
	for (int n = 0; n < 12; ++n) {
		int da = rng.uniform_int(0, 2), db = rng.uniform_int(0, 2);
		auto a = random_equivariant_form(l, da, rng, true).form_degree_piece(da);
		auto b = random_equivariant_form(l, db, rng, true);
		int sign = da % 2 ? -1 : 1;
		auto sgn = [&](const EquivariantForm &f) { return sign < 0 ? -f : f; };
		CHECK(exterior_derivative(wedge(a, b)) ==
		      wedge(exterior_derivative(a), b) + sgn(wedge(a, exterior_derivative(b))));
		CHECK(contract_x(wedge(a, b)) ==
		      wedge(contract_x(a), b) + sgn(wedge(a, contract_x(b))));
	}
}

TEST_CASE("twisted differential")
{
	// d_eq((i/2pi)(zb1/s) dz1) = (i/2pi) X11 at rank one
	auto f = gen(1, GenKind::dz, 1) * mono(1, {zb_var(1)}, 1) * Scalar::i_over_two_pi(1);
	auto expected = EquivariantForm::scalar(
	    1, RationalCoefficient(1, Polynomial::variable(x_var(1, 1))) * Scalar::i_over_two_pi(1));
	CHECK(d_eq(f) == expected);

	CHECK(d_eq(EquivariantForm::unit(2)).is_zero());
}

TEST_CASE("d_eq squares to zero on equivariant forms")
{
	Rng rng(105);
	for (int l = 1; l <= 2; ++l) {
		CHECK(d_eq(d_eq(beta_eq(l))).is_zero());
		CHECK(d_eq(d_eq(chi_eq(l))).is_zero());
		for (int n = 0; n < 10; ++n) {
			auto a = random_equivariant_form(l, rng.uniform_int(0, 4), rng, true);
			CHECK(d_eq(d_eq(a)).is_zero());
		}
	}
}

TEST_CASE("total Lie derivative: equivariance detector")
{
	// constants are invariant
	CHECK(total_lie_derivative(EquivariantForm::unit(2), 1, 2).is_zero());

	// z1 is not invariant along E_11
	auto z1 = EquivariantForm::scalar(2, mono(2, {z_var(1)}));
	CHECK(!total_lie_derivative(z1, 1, 1).is_zero());

	// every pool element is equivariant in every direction
	for (int l = 1; l <= 2; ++l)
		for (const auto &f : equivariant_pool(l))
			for (int a = 1; a <= l; ++a)
				for (int b = 1; b <= l; ++b)
					CHECK(total_lie_derivative(f, a, b).is_zero());

	// the kernel is equivariant (rank 1 and 2)
	for (int l = 1; l <= 2; ++l)
		for (int a = 1; a <= l; ++a)
			for (int b = 1; b <= l; ++b)
				CHECK(total_lie_derivative(beta_eq(l), a, b).is_zero());
}

TEST_CASE("numeric evaluation is multilinear and alternating")
{
	int l = 2;
	Rng rng(106);
	auto f = beta_eq(l).set_x_zero(); // a 3-form
	auto x_point = std::function<std::complex<double>(Var)>{};
	auto rnd = [&] { return 2.0 * (double(rng.next() >> 11) * 0x1.0p-53) - 1.0; };
	for (int trial = 0; trial < 10; ++trial) {
		std::vector<std::complex<double>> p(l);
		for (int i = 0; i < l; ++i)
			p[i] = {rnd() + 2.0, rnd()};
		std::vector<std::vector<std::complex<double>>> v(3, std::vector<std::complex<double>>(l));
		for (auto &vec : v)
			for (auto &x : vec)
				x = {rnd(), rnd()};
		auto value = [&](const std::vector<std::vector<std::complex<double>>> &fr) {
			return eval_on_frame(f, p, fr, x_point, M_PI);
		};
		// swapping two arguments negates
		auto swapped = v;
		std::swap(swapped[0], swapped[2]);
		CHECK(std::abs(value(v) + value(swapped)) < 1e-10);
		// scaling one argument scales the value
		auto scaled = v;
		for (auto &x : scaled[1])
			x *= 2.5;
		CHECK(std::abs(value(scaled) - 2.5 * value(v)) < 1e-10);
		// additivity in one slot
		auto sum = v, other = v;
		for (size_t i = 0; i < sum[0].size(); ++i) {
			other[0][i] = {rnd(), rnd()};
			sum[0][i] = v[0][i] + other[0][i];
		}
		CHECK(std::abs(value(sum) - value(v) - value(other)) < 1e-10);
	}
}

TEST_CASE("dt generators are rejected by the manifold calculus")
{
	EquivariantForm f = EquivariantForm::generator(2, {GenKind::dt, 1}, 1);
	CHECK_THROWS_AS(exterior_derivative(f), std::invalid_argument);
	CHECK_THROWS_AS(contract_x(f), std::invalid_argument);
	CHECK_THROWS_AS(total_lie_derivative(f, 1, 1), std::invalid_argument);
}

TEST_CASE("degree bookkeeping: strata and total degree")
{
	for (int l = 1; l <= 3; ++l) {
		auto beta = beta_eq(l);
		for (const auto &[p, piece] : beta.x_strata()) {
			CHECK(piece.is_form_homogeneous(2 * l - 1 - 2 * p));
			for (const auto &[mask, c] : piece.terms())
				CHECK(c.numerator().is_homogeneous_in_kind(VarKind::X, p));
		}
	}
}
