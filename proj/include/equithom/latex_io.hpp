#pragma once

// Deterministic LaTeX emission (term order = canonical storage order).
// For rank one the variables print without subscripts and monomial factors
// cancel against |z|^2 = z zb, so the classical kernel renders as
// \frac{\sqrt{-1}}{2\pi}\frac{dz}{z}.

#include "equithom/cech.hpp"
#include "equithom/chern_roots.hpp"
#include "equithom/connection.hpp"
#include "equithom/form.hpp"

#include <string>

namespace equithom {

std::string latex(const Scalar &s);
std::string latex(const RationalCoefficient &c);
std::string latex(const EquivariantForm &f);
std::string latex(const TruncatedSeries &s);
std::string latex(const ChernBasisPolynomial &p);
std::string latex(const FormMatrix &m); // pmatrix environment

// s-expression emitters (one line, fully parenthesized)
std::string sexpr(const Scalar &s);
std::string sexpr(const RationalCoefficient &c);
std::string sexpr(const EquivariantForm &f);

} // namespace equithom
