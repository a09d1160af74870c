#pragma once

// Coefficient ring of all equivariant forms on C^l \ {0}: a polynomial
// numerator over {z, zb, X, t} divided by sigma^m with sigma = |z|^2.
// Canonical form: sigma does not divide the numerator while m > 0.

#include "equithom/polynomial.hpp"

#include <complex>
#include <vector>

namespace equithom {

class RationalCoefficient
{
  public:
	RationalCoefficient() = default;

	RationalCoefficient(int rank, Polynomial num, int denom_exp = 0)
	    : rank_(rank), num_(std::move(num)), denom_exp_(denom_exp)
	{
		if (denom_exp < 0)
			throw std::invalid_argument("RationalCoefficient: negative denominator exponent");
		canonicalize();
	}
	RationalCoefficient(int rank, Scalar c) : rank_(rank), num_(std::move(c)) {}
	RationalCoefficient(int rank, int n) : rank_(rank), num_(Scalar(n)) {}

	int rank() const { return rank_; }
	const Polynomial &numerator() const { return num_; }
	int denom_exp() const { return denom_exp_; }
	bool is_zero() const { return num_.is_zero(); }

	RationalCoefficient &operator+=(const RationalCoefficient &o);
	RationalCoefficient &operator-=(const RationalCoefficient &o);
	RationalCoefficient operator-() const;
	friend RationalCoefficient operator+(RationalCoefficient a, const RationalCoefficient &b)
	{
		return a += b;
	}
	friend RationalCoefficient operator-(RationalCoefficient a, const RationalCoefficient &b)
	{
		return a -= b;
	}
	friend RationalCoefficient operator*(const RationalCoefficient &a,
	                                     const RationalCoefficient &b);
	RationalCoefficient &operator*=(const RationalCoefficient &o) { return *this = *this * o; }
	RationalCoefficient operator*(const Scalar &c) const
	{
		return RationalCoefficient(rank_, num_ * c, denom_exp_);
	}

	// canonical forms make equality a direct comparison
	friend bool operator==(const RationalCoefficient &a, const RationalCoefficient &b)
	{
		return a.rank_ == b.rank_ && a.denom_exp_ == b.denom_exp_ && a.num_ == b.num_;
	}
	friend bool operator!=(const RationalCoefficient &a, const RationalCoefficient &b)
	{
		return !(a == b);
	}

	// cross-multiplication equality P1 * sigma^m2 == P2 * sigma^m1
	bool equals_cross(const RationalCoefficient &o) const;

	// point assigns every z_i; zb_i is taken as the conjugate. X and t
	// entries are read from the callbacks (may be empty for X-free input).
	std::complex<double>
	eval(const std::vector<std::complex<double>> &z,
	     const std::function<std::complex<double>(Var)> &other, double pi_value) const;

	std::string str() const;

  private:
	void canonicalize();

	int rank_ = 0;
	Polynomial num_;
	int denom_exp_ = 0;
};

} // namespace equithom
