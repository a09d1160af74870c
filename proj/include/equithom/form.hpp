#pragma once

// Cartan-model equivariant differential forms on C^l, with optional simplex
// directions dt_1..dt_p for transgression computations. A form is a map
// from sorted anticommuting generator sets (stored as bitmasks under the
// global order dz_1 < .. < dz_l < dzb_1 < .. < dzb_l < dt_1 < .. < dt_p)
// to RationalCoefficient. Each stored term is homogeneous in form degree;
// X-degrees may mix inside one coefficient.

#include "equithom/coefficient.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace equithom {

enum class GenKind { dz, dzb, dt };

struct Generator
{
	GenKind kind;
	int index; // 1-based

	friend bool operator==(const Generator &, const Generator &) = default;
};

using GenMask = uint32_t;

// Koszul sign for sorting the concatenation (a-list, b-list); 0 on overlap.
int koszul_sign(GenMask a, GenMask b);

class EquivariantForm
{
  public:
	EquivariantForm() = default;
	EquivariantForm(int rank, int simplex_dim = 0) : rank_(rank), simplex_dim_(simplex_dim) {}

	static EquivariantForm zero(int rank, int simplex_dim = 0)
	{
		return EquivariantForm(rank, simplex_dim);
	}
	static EquivariantForm scalar(int rank, RationalCoefficient c, int simplex_dim = 0);
	static EquivariantForm unit(int rank, int simplex_dim = 0)
	{
		return scalar(rank, RationalCoefficient(rank, 1), simplex_dim);
	}
	// the one-form given by a single generator
	static EquivariantForm generator(int rank, Generator g, int simplex_dim = 0);

	int rank() const { return rank_; }
	int simplex_dim() const { return simplex_dim_; }
	bool is_zero() const { return terms_.empty(); }
	const std::map<GenMask, RationalCoefficient> &terms() const { return terms_; }

	int gen_bit(Generator g) const;
	std::vector<Generator> mask_generators(GenMask mask) const;
	bool mask_has_dt(GenMask mask) const;
	bool has_dt() const;

	void add_term(GenMask mask, const RationalCoefficient &c);
	const RationalCoefficient &coefficient(GenMask mask) const; // zero if absent

	EquivariantForm &operator+=(const EquivariantForm &o);
	EquivariantForm &operator-=(const EquivariantForm &o);
	EquivariantForm operator-() const;
	friend EquivariantForm operator+(EquivariantForm a, const EquivariantForm &b)
	{
		return a += b;
	}
	friend EquivariantForm operator-(EquivariantForm a, const EquivariantForm &b)
	{
		return a -= b;
	}
	EquivariantForm operator*(const RationalCoefficient &c) const;
	EquivariantForm operator*(const Scalar &c) const;

	friend bool operator==(const EquivariantForm &a, const EquivariantForm &b)
	{
		return a.rank_ == b.rank_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const EquivariantForm &a, const EquivariantForm &b)
	{
		return !(a == b);
	}

	// promote to a larger simplex dimension (no dt content changes)
	EquivariantForm with_simplex_dim(int p) const;

	int max_form_degree() const;
	bool is_form_homogeneous(int degree) const;
	// X-degree stratification; key p holds the X-degree-p part
	std::map<int, EquivariantForm> x_strata() const;
	// the piece of maximal form degree
	EquivariantForm top_form_degree_piece() const;
	EquivariantForm form_degree_piece(int degree) const;

	EquivariantForm substitute_t(int nu, const Scalar &value) const; // coefficients only
	EquivariantForm set_x_zero() const;

	std::string str() const;

  private:
	int rank_ = 0;
	int simplex_dim_ = 0;
	std::map<GenMask, RationalCoefficient> terms_;
};

EquivariantForm wedge(const EquivariantForm &a, const EquivariantForm &b);

// manifold exterior derivative; X and t variables are constants, dt
// generators are rejected (the simplex direction is handled by the
// transgression machinery)
EquivariantForm exterior_derivative(const EquivariantForm &a);

// contraction with the fundamental vector field of the u(l)-action,
// X formal:  i_X dz_i = -sum_k X_ik z_k,  i_X dzb_i = +sum_k X_ki zb_k
EquivariantForm contract_x(const EquivariantForm &a);

// twisted differential d_eq = d - i_X
EquivariantForm d_eq(const EquivariantForm &a);

// contraction with the fundamental field of a numeric complexified basis
// element E_ab:  i dz_i = -delta_{ia} z_b,  i dzb_i = +delta_{ib} zb_a
EquivariantForm contract_basis(const EquivariantForm &a, int ea, int eb);

// infinitesimal equivariance defect along E_ab: Lie derivative on the
// manifold part plus the derivation X -> -[E_ab, X] on the X-variables;
// zero exactly on equivariant forms
EquivariantForm total_lie_derivative(const EquivariantForm &a, int ea, int eb);

// value of a k-form on k tangent vectors at a numeric point (tangent
// vectors in complex coordinates; dz_i(v) = v_i, dzb_i(v) = conj(v_i))
std::complex<double> eval_on_frame(const EquivariantForm &a,
                                   const std::vector<std::complex<double>> &z,
                                   std::span<const std::vector<std::complex<double>>> frame,
                                   const std::function<std::complex<double>(Var)> &x_point,
                                   double pi_value);

} // namespace equithom
