#pragma once

// Sparse multivariate polynomials over Scalar, with the lexicographic
// monomial order induced by the global variable order. Only what the
// coefficient ring needs: arithmetic, partial derivatives, substitution,
// degree bookkeeping and exact division by a fixed divisor (used for
// cancelling powers of sigma = |z|^2).

#include "equithom/scalar.hpp"
#include "equithom/variables.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace equithom {

// sorted by Var, exponents > 0
using Monomial = std::vector<std::pair<Var, int>>;

// lex order: at the smallest variable where the exponents differ, the
// monomial with the larger exponent is the larger monomial
struct MonomialLess
{
	bool operator()(const Monomial &a, const Monomial &b) const;
};

Monomial mono_mul(const Monomial &a, const Monomial &b);
bool mono_divides(const Monomial &a, const Monomial &b);   // a | b
Monomial mono_div(const Monomial &b, const Monomial &a);   // b / a
int mono_degree(const Monomial &m, VarKind kind);
int mono_total_degree(const Monomial &m);

class Polynomial
{
  public:
	using TermMap = std::map<Monomial, Scalar, MonomialLess>;

	Polynomial() = default;
	Polynomial(Scalar c)
	{
		if (!c.is_zero())
			terms_[Monomial{}] = std::move(c);
	}
	Polynomial(int n) : Polynomial(Scalar(n)) {}

	static Polynomial variable(Var v, Scalar c = Scalar(1))
	{
		Polynomial p;
		p.add_term(Monomial{{v, 1}}, std::move(c));
		return p;
	}

	bool is_zero() const { return terms_.empty(); }
	const TermMap &terms() const { return terms_; }

	void add_term(const Monomial &m, const Scalar &c);

	Polynomial &operator+=(const Polynomial &o);
	Polynomial &operator-=(const Polynomial &o);
	Polynomial operator-() const;
	friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
	Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
	Polynomial operator*(const Scalar &c) const;

	friend bool operator==(const Polynomial &a, const Polynomial &b)
	{
		return a.terms_ == b.terms_;
	}
	friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

	Polynomial derivative(Var v) const;

	// Leibniz derivation determined by images of single variables.
	// Variables for which `image` returns nullopt are treated as constants.
	Polynomial derivation(const std::function<std::optional<Polynomial>(Var)> &image) const;

	// substitute a single variable by a constant
	Polynomial substitute(Var v, const Scalar &value) const;

	// drop every monomial that contains a variable of the given kind with
	// positive exponent (i.e. substitute all of them by zero)
	Polynomial drop_kind(VarKind kind) const;

	bool has_kind(VarKind kind) const;
	int degree_in_kind(VarKind kind) const; // max over monomials
	bool is_homogeneous_in_kind(VarKind kind, int deg) const;

	// split by X-degree of the monomials
	std::map<int, Polynomial> strata_by_kind(VarKind kind) const;

	std::complex<double> eval(const std::function<std::complex<double>(Var)> &point,
	                          double pi_value) const;

	// exact division: returns quotient iff divisor divides *this.
	// Requires the leading coefficient of the divisor to be 1.
	std::optional<Polynomial> divide_exact(const Polynomial &divisor) const;

	std::string str() const;

  private:
	TermMap terms_;
};

// sigma = sum_i z_i * zb_i, the squared norm
Polynomial sigma_polynomial(int rank);

} // namespace equithom
