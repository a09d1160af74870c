#include "equithom/cech.hpp"

#include "equithom/bm_kernel.hpp"

namespace equithom {

namespace {

void check_regular_at_origin(const EquivariantForm &xi1)
{
	for (const auto &[m, c] : xi1.terms())
		if (c.denom_exp() != 0)
			throw std::invalid_argument("CechTriple: xi1 must be regular at the origin");
}

} // namespace

CechTriple::CechTriple(EquivariantForm xi0_, EquivariantForm xi1_, EquivariantForm xi01_,
                       int degree_, TripleRepresentation rep)
    : xi0(std::move(xi0_)), xi1(std::move(xi1_)), xi01(std::move(xi01_)), degree(degree_),
      representation(rep)
{
	if (xi0.rank() != xi1.rank() || xi1.rank() != xi01.rank())
		throw std::invalid_argument("CechTriple: rank mismatch");
	check_regular_at_origin(xi1);
}

CechTriple d_eq_triple(const CechTriple &t)
{
	return CechTriple(d_eq(t.xi0), d_eq(t.xi1), t.xi1 - t.xi0 - d_eq(t.xi01), t.degree + 1,
	                  t.representation);
}

CechTriple cup(const CechTriple &a, const CechTriple &b)
{
	EquivariantForm mixed = wedge(a.xi01, b.xi1);
	EquivariantForm corner = wedge(a.xi0, b.xi01);
	if (a.degree % 2)
		corner = -corner;
	return CechTriple(wedge(a.xi0, b.xi0), wedge(a.xi1, b.xi1), corner + mixed,
	                  a.degree + b.degree, a.representation);
}

CechTriple thom_cocycle(int rank, TripleRepresentation rep)
{
	return CechTriple(EquivariantForm::zero(rank), chi_eq(rank), beta_eq(rank), 2 * rank, rep);
}

} // namespace equithom
