#include "equithom/coefficient.hpp"

#include <sstream>

namespace equithom {

namespace {

void check_ranks(const RationalCoefficient &a, const RationalCoefficient &b)
{
	if (a.rank() != b.rank())
		throw std::invalid_argument("RationalCoefficient: rank mismatch");
}

Polynomial sigma_power(int rank, int e)
{
	Polynomial p(1);
	Polynomial s = sigma_polynomial(rank);
	for (int k = 0; k < e; ++k)
		p *= s;
	return p;
}

} // namespace

void RationalCoefficient::canonicalize()
{
	if (num_.is_zero()) {
		denom_exp_ = 0;
		return;
	}
	if (denom_exp_ == 0)
		return;
	Polynomial s = sigma_polynomial(rank_);
	while (denom_exp_ > 0) {
		auto q = num_.divide_exact(s);
		if (!q)
			break;
		num_ = std::move(*q);
		--denom_exp_;
	}
}

RationalCoefficient &RationalCoefficient::operator+=(const RationalCoefficient &o)
{
	check_ranks(*this, o);
	int m = std::max(denom_exp_, o.denom_exp_);
	Polynomial num = num_ * sigma_power(rank_, m - denom_exp_) +
	                 o.num_ * sigma_power(rank_, m - o.denom_exp_);
	*this = RationalCoefficient(rank_, std::move(num), m);
	return *this;
}

RationalCoefficient &RationalCoefficient::operator-=(const RationalCoefficient &o)
{
	return *this += -o;
}

RationalCoefficient RationalCoefficient::operator-() const
{
	RationalCoefficient r = *this;
	r.num_ = -r.num_;
	return r;
}

RationalCoefficient operator*(const RationalCoefficient &a, const RationalCoefficient &b)
{
	check_ranks(a, b);
	return RationalCoefficient(a.rank_, a.num_ * b.num_, a.denom_exp_ + b.denom_exp_);
}

bool RationalCoefficient::equals_cross(const RationalCoefficient &o) const
{
	check_ranks(*this, o);
	return num_ * sigma_power(rank_, o.denom_exp_) == o.num_ * sigma_power(rank_, denom_exp_);
}

std::complex<double>
RationalCoefficient::eval(const std::vector<std::complex<double>> &z,
                          const std::function<std::complex<double>(Var)> &other,
                          double pi_value) const
{
	auto point = [&](Var v) -> std::complex<double> {
		switch (var_kind(v)) {
		case VarKind::z:
			return z.at(var_a(v) - 1);
		case VarKind::zb:
			return std::conj(z.at(var_a(v) - 1));
		default:
			if (!other)
				throw std::invalid_argument("RationalCoefficient::eval: unassigned variable " +
				                            var_name(v));
			return other(v);
		}
	};
	double norm2 = 0;
	for (const auto &zi : z)
		norm2 += std::norm(zi);
	if (denom_exp_ > 0 && norm2 == 0.0)
		throw std::domain_error("RationalCoefficient::eval: |z| = 0 with sigma denominator");
	std::complex<double> v = num_.eval(point, pi_value);
	for (int k = 0; k < denom_exp_; ++k)
		v /= norm2;
	return v;
}

std::string RationalCoefficient::str() const
{
	std::ostringstream os;
	os << "(" << num_.str() << ")";
	if (denom_exp_ > 0)
		os << "/sigma^" << denom_exp_;
	return os.str();
}

} // namespace equithom
