#pragma once

// Ground coefficients: finite sums  sum_k c_k * pi^k  with c_k in Q(i) and
// k an integer (negative powers allowed). pi is a formal transcendental, so
// equalities like "integral = 1" are decided exactly.

#include "equithom/rational.hpp"

#include <complex>
#include <map>

namespace equithom {

class Scalar
{
  public:
	Scalar() = default;
	Scalar(int n) { set(0, GaussRational(n)); }
	Scalar(const Rational &r) { set(0, GaussRational(r)); }
	Scalar(const GaussRational &c) { set(0, c); }

	// c * pi^k
	static Scalar pi_power(int k, GaussRational c = GaussRational(1))
	{
		Scalar s;
		s.set(k, std::move(c));
		return s;
	}
	static Scalar unit_i() { return Scalar(GaussRational::unit_i()); }

	// (sqrt(-1)/2)^n * pi^(-n); the normalization (sqrt(-1)/(2 pi))^n
	static Scalar i_over_two_pi(unsigned n)
	{
		return pi_power(-int(n), GaussRational(Rational(0), Rational(1, 2)).pow(n));
	}

	bool is_zero() const { return terms_.empty(); }

	const std::map<int, GaussRational> &terms() const { return terms_; }

	void set(int pi_exp, GaussRational c)
	{
		if (c.is_zero())
			terms_.erase(pi_exp);
		else
			terms_[pi_exp] = std::move(c);
	}

	Scalar &operator+=(const Scalar &o);
	Scalar &operator-=(const Scalar &o);
	Scalar operator-() const;
	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(const Scalar &a, const Scalar &b);
	Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

	friend bool operator==(const Scalar &a, const Scalar &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

	Scalar conj() const;

	std::complex<double> eval(double pi_value) const;

	std::string str() const;

  private:
	std::map<int, GaussRational> terms_; // pi exponent -> nonzero coefficient
};

} // namespace equithom
