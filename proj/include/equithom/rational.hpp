#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace equithom {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational_from_string(const std::string &s) { return Rational(s); }

inline double to_double(const Rational &r) { return r.convert_to<double>(); }

inline Rational factorial(unsigned n)
{
	Rational r = 1;
	for (unsigned k = 2; k <= n; ++k)
		r *= k;
	return r;
}

// Element of Q(i): re + im * sqrt(-1), both exact rationals.
struct GaussRational
{
	Rational re{0};
	Rational im{0};

	GaussRational() = default;
	GaussRational(int n) : re(n) {}
	GaussRational(Rational r) : re(std::move(r)) {}
	GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

	static GaussRational unit_i() { return GaussRational(Rational(0), Rational(1)); }

	bool is_zero() const { return re == 0 && im == 0; }

	GaussRational conj() const { return GaussRational(re, -im); }

	GaussRational &operator+=(const GaussRational &o)
	{
		re += o.re;
		im += o.im;
		return *this;
	}
	GaussRational &operator-=(const GaussRational &o)
	{
		re -= o.re;
		im -= o.im;
		return *this;
	}
	GaussRational operator-() const { return GaussRational(-re, -im); }

	friend GaussRational operator+(GaussRational a, const GaussRational &b) { return a += b; }
	friend GaussRational operator-(GaussRational a, const GaussRational &b) { return a -= b; }

	friend GaussRational operator*(const GaussRational &a, const GaussRational &b)
	{
		return GaussRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
	}
	GaussRational &operator*=(const GaussRational &o) { return *this = *this * o; }

	GaussRational inverse() const
	{
		Rational n = re * re + im * im;
		if (n == 0)
			throw std::domain_error("GaussRational: division by zero");
		return GaussRational(re / n, -im / n);
	}
	friend GaussRational operator/(const GaussRational &a, const GaussRational &b)
	{
		return a * b.inverse();
	}

	friend bool operator==(const GaussRational &a, const GaussRational &b)
	{
		return a.re == b.re && a.im == b.im;
	}
	friend bool operator!=(const GaussRational &a, const GaussRational &b) { return !(a == b); }

	GaussRational pow(unsigned n) const
	{
		GaussRational r(1);
		for (unsigned k = 0; k < n; ++k)
			r *= *this;
		return r;
	}

	std::complex<double> to_complex() const
	{
		return {to_double(re), to_double(im)};
	}

	// "p/q" or "p/q+r/s*i" style, exact
	std::string str() const;
};

std::string rational_str(const Rational &r);

} // namespace equithom
