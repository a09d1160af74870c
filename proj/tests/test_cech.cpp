#include "equithom/cech.hpp"
#include "equithom/bm_kernel.hpp"
#include "equithom/sampling.hpp"
#include "equithom/sphere_integration.hpp"

#include <doctest.h>

using namespace equithom;

TEST_CASE("triple differential on constants")
{
	int l = 2;
	CechTriple t(EquivariantForm::zero(l), EquivariantForm::unit(l), EquivariantForm::zero(l),
	             0);
	auto d = d_eq_triple(t);
	CHECK(d.xi0.is_zero());
	CHECK(d.xi1.is_zero());
	CHECK(d.xi01 == EquivariantForm::unit(l));
	CHECK(d.degree == 1);
}

TEST_CASE("regularity of xi1 is enforced")
{
	int l = 2;
	auto singular = EquivariantForm::scalar(l, RationalCoefficient(l, Polynomial(1), 1));
	CHECK_THROWS_AS(CechTriple(EquivariantForm::zero(l), singular, EquivariantForm::zero(l), 0),
	                std::invalid_argument);
	// the same form is fine in the xi0 / xi01 slots
	CechTriple ok(singular, EquivariantForm::zero(l), singular, 0);
	CHECK(ok.is_relative() == false);
}

TEST_CASE("thom cocycle: components and closedness")
{
	for (int l = 1; l <= 3; ++l) {
		CechTriple t = thom_cocycle(l);
		CHECK(t.is_relative());
		CHECK(t.degree == 2 * l);
		CHECK(t.xi1 == chi_eq(l));
		CHECK(t.xi01 == beta_eq(l));
		CHECK(d_eq_triple(t).is_zero());
	}
	// rank one angular part is the classical kernel
	CHECK(thom_cocycle(1).xi01 ==
	      EquivariantForm::generator(1, {GenKind::dz, 1}) *
	          RationalCoefficient(1, Polynomial::variable(zb_var(1)), 1) *
	          Scalar::i_over_two_pi(1));
}

TEST_CASE("the angular form integrates to one, in both representations")
{
	for (int l = 1; l <= 3; ++l) {
		CechTriple t = thom_cocycle(l, TripleRepresentation::theorem);
		// -(pi_01)_* psi_eq = +(pi_01)_* xi01 = 1 since xi01 = -psi_eq
		auto v = sphere_integrate_exact(t.xi01.top_form_degree_piece());
		CHECK(v == RationalCoefficient(l, 1));
	}
}

TEST_CASE("cup products")
{
	int l = 2;
	Rng rng(41);
	// unit triple acts as identity
	CechTriple unit(EquivariantForm::unit(l), EquivariantForm::unit(l),
	                EquivariantForm::zero(l), 0);
	CechTriple t = random_cech_triple(l, 2, rng);
	CHECK(cup(unit, t) == t);

	// pairing a relative triple with a constant pair stays relative
	CechTriple rel(EquivariantForm::zero(l), t.xi1, t.xi01, t.degree);
	auto eta = random_equivariant_form(l, 1, rng, false);
	CechTriple pair(eta, eta, EquivariantForm::zero(l), 1);
	auto prod = cup(rel, pair);
	CHECK(prod.is_relative());
	CHECK(prod.xi1 == wedge(rel.xi1, eta));
	CHECK(prod.xi01 == wedge(rel.xi01, eta));
}

TEST_CASE("differential squares to zero and Leibniz holds on random triples")
{
	Rng rng(42);
	for (int l = 1; l <= 2; ++l)
		for (int n = 0; n < 25; ++n) {
			int r = rng.uniform_int(1, 3);
			CechTriple a = random_cech_triple(l, r, rng);
			CHECK(d_eq_triple(d_eq_triple(a)).is_zero());

			CechTriple b = random_cech_triple(l, rng.uniform_int(1, 2), rng);
			CechTriple lhs = d_eq_triple(cup(a, b));
			CechTriple t1 = cup(d_eq_triple(a), b);
			CechTriple t2 = cup(a, d_eq_triple(b));
			int sign = r % 2 ? -1 : 1;
			auto sgn = [&](const EquivariantForm &f) { return sign < 0 ? -f : f; };
			CHECK((lhs.xi0 - t1.xi0 - sgn(t2.xi0)).is_zero());
			CHECK((lhs.xi1 - t1.xi1 - sgn(t2.xi1)).is_zero());
			CHECK((lhs.xi01 - t1.xi01 - sgn(t2.xi01)).is_zero());
		}
}

TEST_CASE("relative triples are closed under the differential and the pairing")
{
	Rng rng(43);
	int l = 2;
	for (int n = 0; n < 10; ++n) {
		CechTriple t = random_cech_triple(l, rng.uniform_int(1, 3), rng);
		CechTriple rel(EquivariantForm::zero(l), t.xi1, t.xi01, t.degree);
		CHECK(d_eq_triple(rel).is_relative());
	}
}
