#include "equithom/polynomial.hpp"

#include <sstream>

namespace equithom {

Var var_from_name(const std::string &name)
{
	if (name.size() < 2)
		throw std::invalid_argument("var_from_name: bad name '" + name + "'");
	if (name[0] == 'z' && name[1] == 'b')
		return zb_var(std::stoul(name.substr(2)));
	if (name[0] == 'z')
		return z_var(std::stoul(name.substr(1)));
	if (name[0] == 'X') {
		if (name.size() != 3)
			throw std::invalid_argument("var_from_name: bad X name '" + name + "'");
		return x_var(name[1] - '0', name[2] - '0');
	}
	if (name[0] == 't')
		return t_var(std::stoul(name.substr(1)));
	throw std::invalid_argument("var_from_name: bad name '" + name + "'");
}

bool MonomialLess::operator()(const Monomial &a, const Monomial &b) const
{
	size_t i = 0, j = 0;
	while (i < a.size() && j < b.size()) {
		if (a[i].first == b[j].first) {
			if (a[i].second != b[j].second)
				return a[i].second < b[j].second;
			++i, ++j;
		} else if (a[i].first < b[j].first) {
			// a has a positive exponent at an earlier variable
			return false;
		} else {
			return true;
		}
	}
	return j < b.size();
}

Monomial mono_mul(const Monomial &a, const Monomial &b)
{
	Monomial r;
	r.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
			r.push_back(a[i++]);
		else if (i == a.size() || b[j].first < a[i].first)
			r.push_back(b[j++]);
		else {
			r.emplace_back(a[i].first, a[i].second + b[j].second);
			++i, ++j;
		}
	}
	return r;
}

bool mono_divides(const Monomial &a, const Monomial &b)
{
	size_t j = 0;
	for (const auto &[v, e] : a) {
		while (j < b.size() && b[j].first < v)
			++j;
		if (j == b.size() || b[j].first != v || b[j].second < e)
			return false;
	}
	return true;
}

Monomial mono_div(const Monomial &b, const Monomial &a)
{
	Monomial r;
	size_t j = 0;
	for (const auto &[v, e] : b) {
		int rest = e;
		if (j < a.size() && a[j].first == v) {
			rest -= a[j].second;
			++j;
		}
		if (rest > 0)
			r.emplace_back(v, rest);
	}
	return r;
}

int mono_degree(const Monomial &m, VarKind kind)
{
	int d = 0;
	for (const auto &[v, e] : m)
		if (var_kind(v) == kind)
			d += e;
	return d;
}

int mono_total_degree(const Monomial &m)
{
	int d = 0;
	for (const auto &[v, e] : m)
		d += e;
	return d;
}

void Polynomial::add_term(const Monomial &m, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto it = terms_.find(m);
	if (it == terms_.end()) {
		terms_.emplace(m, c);
	} else {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
	for (const auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
	for (const auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Polynomial Polynomial::operator-() const
{
	Polynomial r;
	for (const auto &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
	Polynomial r;
	for (const auto &[ma, ca] : a.terms_)
		for (const auto &[mb, cb] : b.terms_)
			r.add_term(mono_mul(ma, mb), ca * cb);
	return r;
}

Polynomial Polynomial::operator*(const Scalar &c) const
{
	Polynomial r;
	if (c.is_zero())
		return r;
	for (const auto &[m, c0] : terms_) {
		auto prod = c0 * c;
		if (!prod.is_zero())
			r.terms_.emplace(m, prod);
	}
	return r;
}

Polynomial Polynomial::derivative(Var v) const
{
	Polynomial r;
	for (const auto &[m, c] : terms_)
		for (size_t i = 0; i < m.size(); ++i)
			if (m[i].first == v) {
				Monomial m2 = m;
				if (--m2[i].second == 0)
					m2.erase(m2.begin() + i);
				r.add_term(m2, c * Scalar(m[i].second));
			}
	return r;
}

Polynomial Polynomial::derivation(
    const std::function<std::optional<Polynomial>(Var)> &image) const
{
	Polynomial r;
	for (const auto &[m, c] : terms_)
		for (size_t i = 0; i < m.size(); ++i) {
			auto img = image(m[i].first);
			if (!img || img->is_zero())
				continue;
			Monomial m2 = m;
			if (--m2[i].second == 0)
				m2.erase(m2.begin() + i);
			Polynomial rest;
			rest.add_term(m2, c * Scalar(m[i].second));
			r += rest * *img;
		}
	return r;
}

Polynomial Polynomial::substitute(Var v, const Scalar &value) const
{
	Polynomial r;
	for (const auto &[m, c] : terms_) {
		Scalar c2 = c;
		Monomial m2;
		for (const auto &[w, e] : m) {
			if (w == v) {
				for (int k = 0; k < e; ++k)
					c2 *= value;
			} else {
				m2.emplace_back(w, e);
			}
		}
		r.add_term(m2, c2);
	}
	return r;
}

Polynomial Polynomial::drop_kind(VarKind kind) const
{
	Polynomial r;
	for (const auto &[m, c] : terms_)
		if (mono_degree(m, kind) == 0)
			r.terms_.emplace(m, c);
	return r;
}

bool Polynomial::has_kind(VarKind kind) const
{
	for (const auto &[m, c] : terms_)
		if (mono_degree(m, kind) > 0)
			return true;
	return false;
}

int Polynomial::degree_in_kind(VarKind kind) const
{
	int d = 0;
	for (const auto &[m, c] : terms_)
		d = std::max(d, mono_degree(m, kind));
	return d;
}

bool Polynomial::is_homogeneous_in_kind(VarKind kind, int deg) const
{
	for (const auto &[m, c] : terms_)
		if (mono_degree(m, kind) != deg)
			return false;
	return true;
}

std::map<int, Polynomial> Polynomial::strata_by_kind(VarKind kind) const
{
	std::map<int, Polynomial> r;
	for (const auto &[m, c] : terms_)
		r[mono_degree(m, kind)].terms_.emplace(m, c);
	return r;
}

std::complex<double> Polynomial::eval(const std::function<std::complex<double>(Var)> &point,
                                      double pi_value) const
{
	std::complex<double> total = 0;
	for (const auto &[m, c] : terms_) {
		std::complex<double> v = c.eval(pi_value);
		for (const auto &[var, e] : m) {
			auto x = point(var);
			for (int k = 0; k < e; ++k)
				v *= x;
		}
		total += v;
	}
	return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial &divisor) const
{
	if (divisor.is_zero())
		throw std::domain_error("divide_exact: zero divisor");
	// leading term of the divisor in the lex order
	const auto &lead = *divisor.terms_.rbegin();
	Polynomial q;
	Polynomial r = *this;
	while (!r.is_zero()) {
		const auto &lt = *r.terms_.rbegin();
		if (!mono_divides(lead.first, lt.first))
			return std::nullopt;
		Monomial qm = mono_div(lt.first, lead.first);
		Polynomial step;
		step.add_term(qm, lt.second);
		q += step;
		r -= step * divisor;
	}
	return q;
}

std::string Polynomial::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[m, c] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		for (const auto &[v, e] : m) {
			os << "*" << var_name(v);
			if (e > 1)
				os << "^" << e;
		}
	}
	return os.str();
}

Polynomial sigma_polynomial(int rank)
{
	Polynomial s;
	for (int i = 1; i <= rank; ++i)
		s.add_term(Monomial{{z_var(i), 1}, {zb_var(i), 1}}, Scalar(1));
	return s;
}

} // namespace equithom
