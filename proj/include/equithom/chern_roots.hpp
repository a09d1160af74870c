#pragma once

// Truncated power series in formal Chern roots a_1..a_l with exact rational
// coefficients; carrier for the Chern character / Todd identities. All
// arithmetic truncates at a fixed total degree bound, consistently enough
// that trunc_N commutes with ring operations.

#include "equithom/rational.hpp"

#include <map>
#include <vector>

namespace equithom {

class TruncatedSeries
{
  public:
	using Exponents = std::vector<int>; // size = nvars

	TruncatedSeries(int nvars, int truncation)
	    : nvars_(nvars), truncation_(truncation)
	{
		if (nvars < 0 || truncation < 0)
			throw std::invalid_argument("TruncatedSeries: bad parameters");
	}

	static TruncatedSeries constant(int nvars, int truncation, Rational c);
	static TruncatedSeries variable(int nvars, int truncation, int j); // a_j, 1-based

	int nvars() const { return nvars_; }
	int truncation() const { return truncation_; }
	bool is_zero() const { return terms_.empty(); }
	const std::map<Exponents, Rational> &terms() const { return terms_; }

	void add_term(const Exponents &e, const Rational &c);

	TruncatedSeries &operator+=(const TruncatedSeries &o);
	TruncatedSeries &operator-=(const TruncatedSeries &o);
	TruncatedSeries operator-() const;
	friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
	{
		return a += b;
	}
	friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
	{
		return a -= b;
	}
	friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
	TruncatedSeries &operator*=(const TruncatedSeries &o) { return *this = *this * o; }

	friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
	{
		return a.nvars_ == b.nvars_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const TruncatedSeries &a, const TruncatedSeries &b)
	{
		return !(a == b);
	}

	TruncatedSeries truncated(int new_bound) const;

	Rational constant_term() const;

	// multiplicative inverse; requires nonzero constant term
	TruncatedSeries inverse() const;

	// swap the roles of a_i and a_j
	TruncatedSeries swap_vars(int i, int j) const;

	bool is_symmetric() const;

	std::string str() const;

  private:
	int nvars_;
	int truncation_;
	std::map<Exponents, Rational> terms_;
};

// sum_j e^{a_j}
TruncatedSeries ch_series(int l, int n);
// prod_j a_j / (1 - e^{-a_j})
TruncatedSeries todd_series(int l, int n);
// prod_j (1 - e^{-a_j}) / a_j
TruncatedSeries todd_inverse_series(int l, int n);
// prod_j (1 - e^{-a_j}); the alternating sum of Chern characters of the
// exterior powers of the dual, in Chern roots
TruncatedSeries ch_alternating_lambda(int l, int n);
// (prod_j a_j) * todd_inverse_series
TruncatedSeries c_top_times_todd_inv(int l, int n);

// polynomial in the elementary symmetric classes c_1..c_l: exponent vector
// (e_1..e_l) stands for c_1^{e_1} ... c_l^{e_l}
using ChernBasisPolynomial = std::map<std::vector<int>, Rational>;

// rewrite a symmetric series through c_i = e_i(a); throws on non-symmetric
// input. Exact for polynomial (truncated) input by the standard leading-
// monomial subtraction.
ChernBasisPolynomial to_chern_basis(const TruncatedSeries &s);

// substitute c_i -> e_i(a_1..a_l) back; inverse of to_chern_basis
TruncatedSeries from_chern_basis(const ChernBasisPolynomial &p, int l, int n);

} // namespace equithom
