#pragma once

// Two-set-cover equivariant Cech-de Rham complex on {W_0, W_1} with
// W_0 = C^l \ {0}, W_1 = C^l. A degree-r cochain is a triple
// (xi_0, xi_1, xi_01) with deg xi_0 = deg xi_1 = r, deg xi_01 = r - 1;
// xi_1 must be regular across the origin (no sigma denominators).
//
//   D_eq (xi_0, xi_1, xi_01) = (d_eq xi_0, d_eq xi_1, xi_1 - xi_0 - d_eq xi_01)
//   (xi) cup (eta) = (xi_0 ^ eta_0, xi_1 ^ eta_1, (-1)^r xi_0 ^ eta_01 + xi_01 ^ eta_1)
//
// The general complex assigns a form to every ordered multi-intersection
// U_{a_0..a_p} of an ordered invariant cover and uses
// D_eq = delta + (-1)^p d_eq with the alternating Cech coboundary delta.
// Every computation this engine certifies lives on the two-set cover
// above, so only that case is realized; the triple layout is the p <= 1
// instance of the general shape.

#include "equithom/form.hpp"

namespace equithom {

// which labeling the emitters use; the stored forms are identical:
// the proof representation is (0, c^l(D^1), c^l(D^0, D^1)), the theorem
// statement writes the same triple as (0, pi^* eps_eq, -psi_eq)
enum class TripleRepresentation { proof, theorem };

struct CechTriple
{
	EquivariantForm xi0, xi1, xi01;
	int degree = 0;
	TripleRepresentation representation = TripleRepresentation::proof;

	CechTriple() = default;
	CechTriple(EquivariantForm xi0_, EquivariantForm xi1_, EquivariantForm xi01_, int degree_,
	           TripleRepresentation rep = TripleRepresentation::proof);

	int rank() const { return xi1.rank(); }
	bool is_relative() const { return xi0.is_zero(); }
	bool is_zero() const { return xi0.is_zero() && xi1.is_zero() && xi01.is_zero(); }

	friend bool operator==(const CechTriple &a, const CechTriple &b)
	{
		return a.xi0 == b.xi0 && a.xi1 == b.xi1 && a.xi01 == b.xi01 && a.degree == b.degree;
	}
};

CechTriple d_eq_triple(const CechTriple &t);

CechTriple cup(const CechTriple &a, const CechTriple &b);

// the relative D_eq-cocycle (0, chi_eq(l), beta_eq(l)) of degree 2l
CechTriple thom_cocycle(int rank, TripleRepresentation rep = TripleRepresentation::proof);

} // namespace equithom
