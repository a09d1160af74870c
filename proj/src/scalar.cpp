#include "equithom/scalar.hpp"

#include <cmath>
#include <sstream>

namespace equithom {

std::string rational_str(const Rational &r)
{
	return r.str();
}

std::string GaussRational::str() const
{
	if (is_zero())
		return "0";
	std::ostringstream os;
	if (re != 0)
		os << rational_str(re);
	if (im != 0) {
		if (re != 0 && im > 0)
			os << "+";
		if (im == -1)
			os << "-";
		else if (im != 1)
			os << rational_str(im) << "*";
		os << "i";
	}
	return os.str();
}

Scalar &Scalar::operator+=(const Scalar &o)
{
	for (const auto &[k, c] : o.terms_) {
		auto it = terms_.find(k);
		if (it == terms_.end()) {
			terms_.emplace(k, c);
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
	return *this += -o;
}

Scalar Scalar::operator-() const
{
	Scalar r;
	for (const auto &[k, c] : terms_)
		r.terms_.emplace(k, -c);
	return r;
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
	Scalar r;
	for (const auto &[ka, ca] : a.terms_)
		for (const auto &[kb, cb] : b.terms_) {
			auto prod = ca * cb;
			auto it = r.terms_.find(ka + kb);
			if (it == r.terms_.end())
				r.terms_.emplace(ka + kb, prod);
			else {
				it->second += prod;
				if (it->second.is_zero())
					r.terms_.erase(it);
			}
		}
	return r;
}

Scalar Scalar::conj() const
{
	Scalar r;
	for (const auto &[k, c] : terms_)
		r.terms_.emplace(k, c.conj());
	return r;
}

std::complex<double> Scalar::eval(double pi_value) const
{
	std::complex<double> v = 0;
	for (const auto &[k, c] : terms_)
		v += c.to_complex() * std::pow(pi_value, double(k));
	return v;
}

std::string Scalar::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[k, c] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		if (k != 0)
			os << "*pi^" << k;
	}
	return os.str();
}

} // namespace equithom
