#include "equithom/chern_weil.hpp"
#include "equithom/connection.hpp"
#include "equithom/sampling.hpp"

#include <doctest.h>

using namespace equithom;

namespace {

EquivariantForm x_entry(int l, int a, int b)
{
	return EquivariantForm::scalar(l, RationalCoefficient(l, Polynomial::variable(x_var(a, b))));
}

bool curvature_is_x_matrix(const Connection &c)
{
	FormMatrix kappa = curvature(c);
	for (int i = 0; i < c.rank; ++i)
		for (int j = 0; j < c.rank; ++j)
			if (kappa[i][j] != x_entry(c.rank, i + 1, j + 1))
				return false;
	return true;
}

} // namespace

TEST_CASE("curvature of the built-in connections")
{
	// kappa(D^1) = [X_ij]
	for (int l = 1; l <= 3; ++l)
		CHECK(curvature_is_x_matrix(builtin_d1(l)));

	// kappa(D^0) = 0 at rank one: the decisive sign-pinning computation
	CHECK(form_matrix_is_zero(curvature(builtin_d0(1))));

	// zero connection with ell = 0 has zero curvature
	Connection zero(2, form_matrix_zero(2),
	                std::vector(2, std::vector<RationalCoefficient>(2, RationalCoefficient(2, 0))));
	CHECK(form_matrix_is_zero(curvature(zero)));
}

TEST_CASE("built-in construction details")
{
	auto d1 = builtin_d1(3);
	CHECK(form_matrix_is_zero(d1.theta));
	// ell[2][1] is X_32 in 0-based storage addressing ell_ij = X_ij
	CHECK(d1.ell[2][1] == RationalCoefficient(3, Polynomial::variable(x_var(3, 2))));
	// and the 1-based entry (2,1)
	CHECK(d1.ell[1][0] == RationalCoefficient(3, Polynomial::variable(x_var(2, 1))));

	auto d0 = builtin_d0(1);
	auto expected = EquivariantForm::generator(1, {GenKind::dz, 1}) *
	                RationalCoefficient(1, -Polynomial::variable(zb_var(1)), 1);
	CHECK(d0.theta[0][0] == expected);

	CHECK_THROWS_AS(builtin_d1(0), std::invalid_argument);
}

TEST_CASE("applying a connection to sections")
{
	// the diagonal section (z_1, .., z_l) is parallel for D^0
	for (int l = 1; l <= 3; ++l) {
		std::vector<RationalCoefficient> diag;
		for (int i = 1; i <= l; ++i)
			diag.emplace_back(l, Polynomial::variable(z_var(i)));
		auto image = apply_to_section(builtin_d0(l), diag);
		for (const auto &f : image)
			CHECK(f.is_zero());
	}

	// D^1 acts as plain differentiation
	std::vector<RationalCoefficient> coeffs = {
	    RationalCoefficient(2, Polynomial::variable(z_var(1))),
	    RationalCoefficient(2, Polynomial::variable(z_var(2)))};
	auto image = apply_to_section(builtin_d1(2), coeffs);
	CHECK(image[0] == EquivariantForm::generator(2, {GenKind::dz, 1}));
	CHECK(image[1] == EquivariantForm::generator(2, {GenKind::dz, 2}));

	auto constant = apply_to_section(builtin_d1(1), {RationalCoefficient(1, 1)});
	CHECK(constant[0].is_zero());

	CHECK_THROWS_AS(apply_to_section(builtin_d1(2), {RationalCoefficient(2, 1)}),
	                std::invalid_argument);
}

TEST_CASE("Bianchi identity for built-ins and randomized invariant connections")
{
	for (int l = 1; l <= 3; ++l) {
		CHECK(form_matrix_is_zero(bianchi_defect(builtin_d0(l))));
		CHECK(form_matrix_is_zero(bianchi_defect(builtin_d1(l))));
	}
	Rng rng(2024);
	for (int l = 1; l <= 3; ++l)
		for (int n = 0; n < 6; ++n) {
			Connection c = random_invariant_connection(l, rng, n % 2 == 0);
			CHECK(form_matrix_is_zero(bianchi_defect(c)));
		}
}

TEST_CASE("Bianchi defect equals minus the invariance defect for arbitrary theta")
{
	Rng rng(2025);
	for (int l = 1; l <= 2; ++l)
		for (int n = 0; n < 6; ++n) {
			Connection c = random_arbitrary_connection(l, rng);
			FormMatrix lhs = bianchi_defect(c);
			FormMatrix rhs = invariance_defect(c);
			for (int i = 0; i < l; ++i)
				for (int j = 0; j < l; ++j)
					CHECK((lhs[i][j] + rhs[i][j]).is_zero());
		}
	// and a generic connection is NOT invariant, so the defect is nonzero
	Connection c = random_arbitrary_connection(2, rng);
	CHECK(!form_matrix_is_zero(bianchi_defect(c)));
}

TEST_CASE("convex combinations of the built-ins")
{
	for (int l = 1; l <= 2; ++l) {
		auto t = RationalCoefficient(l, Polynomial::variable(t_var(1)));
		auto one_minus_t = RationalCoefficient(l, 1) - t;
		Connection interp =
		    affine_combination({{one_minus_t, builtin_d0(l)}, {t, builtin_d1(l)}});
		CHECK(form_matrix_is_zero(bianchi_defect(interp)));

		FormMatrix kappa = curvature(interp);
		FormMatrix at0 = curvature(builtin_d0(l));
		FormMatrix at1 = curvature(builtin_d1(l));
		for (int i = 0; i < l; ++i)
			for (int j = 0; j < l; ++j) {
				CHECK(kappa[i][j].substitute_t(1, Scalar(0)) == at0[i][j]);
				CHECK(kappa[i][j].substitute_t(1, Scalar(1)) == at1[i][j]);
			}
	}

	// weights must sum to one and ell matrices must agree
	CHECK_THROWS_AS(affine_combination({{RationalCoefficient(2, 1), builtin_d0(2)},
	                                    {RationalCoefficient(2, 1), builtin_d1(2)}}),
	                std::invalid_argument);
}

TEST_CASE("connection validation")
{
	// theta entries must be one-forms
	FormMatrix bad = form_matrix_zero(2);
	bad[0][0] = EquivariantForm::unit(2);
	auto ell = builtin_d1(2).ell;
	CHECK_THROWS_AS(Connection(2, bad, ell), std::invalid_argument);

	// ell entries must be X-linear and z-free
	auto bad_ell = ell;
	bad_ell[0][0] = RationalCoefficient(2, Polynomial::variable(z_var(1)));
	CHECK_THROWS_AS(Connection(2, form_matrix_zero(2), bad_ell), std::invalid_argument);
}

TEST_CASE("top Chern form of the frame-trivial connection vanishes")
{
	// the rank-one frame (s_Delta) forces c^i = 0 for i >= l (r = 1)
	for (int l = 1; l <= 3; ++l)
		CHECK(chern_form(builtin_d0(l), l).is_zero());
}
