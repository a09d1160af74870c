#include "equithom/chern_roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace equithom {

namespace {

int total_degree(const TruncatedSeries::Exponents &e)
{
	return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

TruncatedSeries TruncatedSeries::constant(int nvars, int truncation, Rational c)
{
	TruncatedSeries s(nvars, truncation);
	s.add_term(Exponents(nvars, 0), c);
	return s;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int truncation, int j)
{
	if (j < 1 || j > nvars)
		throw std::invalid_argument("TruncatedSeries::variable: index out of range");
	TruncatedSeries s(nvars, truncation);
	Exponents e(nvars, 0);
	e[j - 1] = 1;
	s.add_term(e, 1);
	return s;
}

void TruncatedSeries::add_term(const Exponents &e, const Rational &c)
{
	if (int(e.size()) != nvars_)
		throw std::invalid_argument("TruncatedSeries: wrong exponent size");
	if (c == 0 || total_degree(e) > truncation_)
		return;
	auto it = terms_.find(e);
	if (it == terms_.end()) {
		terms_.emplace(e, c);
	} else {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
	if (nvars_ != o.nvars_ || truncation_ != o.truncation_)
		throw std::invalid_argument("TruncatedSeries: incompatible operands");
	for (const auto &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o)
{
	return *this += -o;
}

TruncatedSeries TruncatedSeries::operator-() const
{
	TruncatedSeries r(nvars_, truncation_);
	for (const auto &[e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
	if (a.nvars_ != b.nvars_ || a.truncation_ != b.truncation_)
		throw std::invalid_argument("TruncatedSeries: incompatible operands");
	TruncatedSeries r(a.nvars_, a.truncation_);
	for (const auto &[ea, ca] : a.terms_)
		for (const auto &[eb, cb] : b.terms_) {
			TruncatedSeries::Exponents e(a.nvars_);
			int deg = 0;
			for (int i = 0; i < a.nvars_; ++i) {
				e[i] = ea[i] + eb[i];
				deg += e[i];
			}
			if (deg <= a.truncation_)
				r.add_term(e, ca * cb);
		}
	return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const
{
	TruncatedSeries r(nvars_, new_bound);
	for (const auto &[e, c] : terms_)
		r.add_term(e, c);
	return r;
}

Rational TruncatedSeries::constant_term() const
{
	auto it = terms_.find(Exponents(nvars_, 0));
	return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::inverse() const
{
	Rational a0 = constant_term();
	if (a0 == 0)
		throw std::domain_error("TruncatedSeries::inverse: zero constant term");
	// Newton iteration B <- B (2 - A B); doubles the valid order each step
	TruncatedSeries b = constant(nvars_, truncation_, 1 / a0);
	TruncatedSeries two = constant(nvars_, truncation_, 2);
	for (int order = 1; order <= truncation_; order *= 2)
		b = b * (two - *this * b);
	return b;
}

TruncatedSeries TruncatedSeries::swap_vars(int i, int j) const
{
	TruncatedSeries r(nvars_, truncation_);
	for (const auto &[e, c] : terms_) {
		Exponents e2 = e;
		std::swap(e2[i - 1], e2[j - 1]);
		r.add_term(e2, c);
	}
	return r;
}

bool TruncatedSeries::is_symmetric() const
{
	for (int i = 1; i < nvars_; ++i)
		if (swap_vars(i, i + 1) != *this)
			return false;
	return true;
}

std::string TruncatedSeries::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[e, c] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << rational_str(c) << ")";
		for (int i = 0; i < nvars_; ++i)
			if (e[i] > 0) {
				os << "*a" << (i + 1);
				if (e[i] > 1)
					os << "^" << e[i];
			}
	}
	return os.str();
}

namespace {

// univariate building block sum_{n>=start} coeff(n) a_j^n
TruncatedSeries univariate(int l, int n, int j,
                           const std::function<Rational(int)> &coeff, int start)
{
	TruncatedSeries s(l, n);
	for (int deg = start; deg <= n; ++deg) {
		TruncatedSeries::Exponents e(l, 0);
		e[j - 1] = deg;
		s.add_term(e, coeff(deg));
	}
	return s;
}

// (1 - e^{-a_j}) / a_j = sum_{n>=0} (-1)^n a_j^n / (n+1)!
TruncatedSeries one_minus_exp_neg_over_a(int l, int n, int j)
{
	return univariate(l, n, j,
	                  [](int deg) {
		                  Rational c = Rational(1) / factorial(unsigned(deg + 1));
		                  return deg % 2 ? -c : c;
	                  },
	                  0);
}

} // namespace

TruncatedSeries ch_series(int l, int n)
{
	TruncatedSeries s(l, n);
	for (int j = 1; j <= l; ++j)
		s += univariate(l, n, j,
		                [](int deg) { return Rational(1) / factorial(unsigned(deg)); }, 0);
	return s;
}

TruncatedSeries todd_series(int l, int n)
{
	TruncatedSeries s = TruncatedSeries::constant(l, n, 1);
	for (int j = 1; j <= l; ++j)
		s *= one_minus_exp_neg_over_a(l, n, j).inverse();
	return s;
}

TruncatedSeries todd_inverse_series(int l, int n)
{
	TruncatedSeries s = TruncatedSeries::constant(l, n, 1);
	for (int j = 1; j <= l; ++j)
		s *= one_minus_exp_neg_over_a(l, n, j);
	return s;
}

TruncatedSeries ch_alternating_lambda(int l, int n)
{
	TruncatedSeries s = TruncatedSeries::constant(l, n, 1);
	for (int j = 1; j <= l; ++j)
		s *= univariate(l, n, j,
		                [](int deg) {
			                Rational c = Rational(1) / factorial(unsigned(deg));
			                return deg % 2 ? c : -c; // 1 - e^{-a}: -(-1)^deg/deg!
		                },
		                1);
	return s;
}

TruncatedSeries c_top_times_todd_inv(int l, int n)
{
	TruncatedSeries c_top = TruncatedSeries::constant(l, n, 1);
	for (int j = 1; j <= l; ++j)
		c_top *= TruncatedSeries::variable(l, n, j);
	return c_top * todd_inverse_series(l, n);
}

namespace {

// elementary symmetric polynomial e_k(a_1..a_l)
TruncatedSeries elementary_symmetric(int l, int n, int k)
{
	TruncatedSeries s(l, n);
	std::vector<int> sel(k);
	if (k == 0)
		return TruncatedSeries::constant(l, n, 1);
	if (k > l)
		return s;
	for (int i = 0; i < k; ++i)
		sel[i] = i;
	while (true) {
		TruncatedSeries::Exponents e(l, 0);
		for (int i : sel)
			e[i] = 1;
		s.add_term(e, 1);
		int i = k - 1;
		while (i >= 0 && sel[i] == l - k + i)
			--i;
		if (i < 0)
			break;
		++sel[i];
		for (int j = i + 1; j < k; ++j)
			sel[j] = sel[j - 1] + 1;
	}
	return s;
}

} // namespace

ChernBasisPolynomial to_chern_basis(const TruncatedSeries &s)
{
	if (!s.is_symmetric())
		throw std::invalid_argument("to_chern_basis: series is not symmetric");
	int l = s.nvars();
	int n = s.truncation();

	std::vector<TruncatedSeries> elem;
	for (int k = 0; k <= l; ++k)
		elem.push_back(elementary_symmetric(l, n, k));

	ChernBasisPolynomial out;
	TruncatedSeries rest = s;
	while (!rest.is_zero()) {
		// leading monomial: the largest exponent vector in graded-lex;
		// symmetry makes it weakly decreasing
		auto lead = rest.terms().begin();
		for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
			int d1 = total_degree(it->first), d0 = total_degree(lead->first);
			if (d1 > d0 || (d1 == d0 && it->first > lead->first))
				lead = it;
		}
		auto lambda = lead->first;
		Rational coeff = lead->second;
		for (size_t i = 0; i + 1 < lambda.size(); ++i)
			if (lambda[i] < lambda[i + 1])
				throw std::logic_error("to_chern_basis: leading exponent not a partition");

		// e_1^{b_1} .. e_l^{b_l} with b_i = lambda_i - lambda_{i+1} has
		// leading monomial exactly a^lambda
		std::vector<int> b(l, 0);
		for (int i = 0; i < l; ++i)
			b[i] = lambda[i] - (i + 1 < l ? lambda[i + 1] : 0);

		TruncatedSeries prod = TruncatedSeries::constant(l, n, 1);
		for (int i = 0; i < l; ++i)
			for (int rep = 0; rep < b[i]; ++rep)
				prod *= elem[i + 1];
		rest -= prod * TruncatedSeries::constant(l, n, coeff);

		auto it = out.find(b);
		if (it == out.end())
			out.emplace(std::move(b), coeff);
		else {
			it->second += coeff;
			if (it->second == 0)
				out.erase(it);
		}
	}
	return out;
}

TruncatedSeries from_chern_basis(const ChernBasisPolynomial &p, int l, int n)
{
	TruncatedSeries s(l, n);
	for (const auto &[b, coeff] : p) {
		TruncatedSeries prod = TruncatedSeries::constant(l, n, coeff);
		for (int i = 0; i < int(b.size()); ++i)
			for (int rep = 0; rep < b[i]; ++rep)
				prod *= elementary_symmetric(l, n, i + 1);
		s += prod;
	}
	return s;
}

} // namespace equithom
