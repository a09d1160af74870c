#include "equithom/sphere_integration.hpp"

#include <bit>
#include <cmath>

namespace equithom {

namespace {

// the two frozen orientation constants (see header): dVol conversion
// dz_1^dzb_1^...^dz_l^dzb_l = (-2i)^l dx_1^dy_1^... reordered to the
// canonical mask order costs (-1)^{l(l-1)/2}; T_01 = -S^{2l-1} gives the
// global -1
constexpr int kBoundaryOrientation = -1;

Scalar dvol_conversion(int l)
{
	// ((-2i)^l) * (-1)^{l(l-1)/2}
	GaussRational c = GaussRational(Rational(0), Rational(-2)).pow(unsigned(l));
	if ((l * (l - 1) / 2) % 2)
		c = -c;
	return Scalar(c);
}

// sum over monomials of: moment * (X-part of the monomial); zero for
// monomials with unmatched z / zb exponents. t variables are rejected.
RationalCoefficient moment_integrate(const Polynomial &p, int l)
{
	Polynomial out;
	for (const auto &[mono, coeff] : p.terms()) {
		std::vector<int> za(l, 0), zba(l, 0);
		Monomial xpart;
		for (const auto &[v, e] : mono) {
			switch (var_kind(v)) {
			case VarKind::z:
				za[var_a(v) - 1] += e;
				break;
			case VarKind::zb:
				zba[var_a(v) - 1] += e;
				break;
			case VarKind::X:
				xpart.emplace_back(v, e);
				break;
			case VarKind::t:
				throw std::invalid_argument("sphere integration: t variable present");
			}
		}
		if (za != zba)
			continue;
		out.add_term(xpart, coeff * sphere_moment(za, l));
	}
	return RationalCoefficient(l, out);
}

// coefficient g with d(sigma) ^ w = g dVol, restricted to |z| = 1
Polynomial radial_wedge_top(const EquivariantForm &w)
{
	int l = w.rank();
	if (w.has_dt())
		throw std::invalid_argument("sphere integration: dt generator present");
	EquivariantForm dsigma(l);
	for (int i = 1; i <= l; ++i) {
		dsigma += EquivariantForm::generator(l, {GenKind::dz, i}) *
		          RationalCoefficient(l, Polynomial::variable(zb_var(i)));
		dsigma += EquivariantForm::generator(l, {GenKind::dzb, i}) *
		          RationalCoefficient(l, Polynomial::variable(z_var(i)));
	}
	EquivariantForm top = wedge(dsigma, w);
	GenMask full = (GenMask(1) << (2 * l)) - 1;
	const RationalCoefficient &c = top.coefficient(full);
	// restriction to the sphere: sigma = 1, so the denominator drops
	return c.numerator();
}

} // namespace

Scalar sphere_moment(const std::vector<int> &alpha, int rank)
{
	long long total = 0;
	Rational num = 2;
	for (int a : alpha) {
		if (a < 0)
			throw std::invalid_argument("sphere_moment: negative exponent");
		total += a;
		num *= factorial(unsigned(a));
	}
	num /= factorial(unsigned(rank - 1 + total));
	return Scalar::pi_power(rank, GaussRational(num));
}

RationalCoefficient sphere_integrate_exact(const EquivariantForm &w)
{
	int l = w.rank();
	if (!w.is_form_homogeneous(2 * l - 1))
		throw std::invalid_argument("sphere_integrate_exact: form degree must be 2l-1");
	return sphere_integrate_exact_any_degree(w);
}

RationalCoefficient sphere_integrate_exact_any_degree(const EquivariantForm &w)
{
	int l = w.rank();
	Polynomial g = radial_wedge_top(w);
	// g dVol = (value) * conversion; divide by 2 from d(sigma) = 2 r dr
	Scalar factor = dvol_conversion(l) * Scalar(Rational(kBoundaryOrientation, 2));
	return moment_integrate(g, l) * factor;
}

RationalCoefficient ball_integrate_exact(const EquivariantForm &w)
{
	int l = w.rank();
	if (w.has_dt())
		throw std::invalid_argument("ball_integrate_exact: dt generator present");
	GenMask full = (GenMask(1) << (2 * l)) - 1;
	const RationalCoefficient &c = w.coefficient(full);
	if (c.is_zero())
		return RationalCoefficient(l, 0);
	if (c.denom_exp() != 0)
		throw std::domain_error("ball_integrate_exact: integrand singular at the origin");

	// radial extension of the sphere moments: each monomial with matched
	// exponents alpha integrates to sphere_moment(alpha) / (2|alpha| + 2l)
	Polynomial out;
	for (const auto &[mono, coeff] : c.numerator().terms()) {
		std::vector<int> za(l, 0), zba(l, 0);
		Monomial xpart;
		for (const auto &[v, e] : mono) {
			switch (var_kind(v)) {
			case VarKind::z:
				za[var_a(v) - 1] += e;
				break;
			case VarKind::zb:
				zba[var_a(v) - 1] += e;
				break;
			case VarKind::X:
				xpart.emplace_back(v, e);
				break;
			case VarKind::t:
				throw std::invalid_argument("ball_integrate_exact: t variable present");
			}
		}
		if (za != zba)
			continue;
		long long total = 0;
		for (int a : za)
			total += a;
		Scalar m = sphere_moment(za, l) * Scalar(Rational(1, 2 * total + 2 * l));
		out.add_term(xpart, coeff * m);
	}
	return RationalCoefficient(l, out) * dvol_conversion(l);
}

namespace {

// counter-based generator: every draw is a pure function of (seed, index)
uint64_t splitmix64(uint64_t x)
{
	x += 0x9e3779b97f4a7c15ull;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
	return x ^ (x >> 31);
}

double uniform01(uint64_t seed, uint64_t index, uint64_t slot)
{
	uint64_t h = splitmix64(seed ^ splitmix64(index * 0x9e3779b97f4a7c15ull + slot));
	return (double(h >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<double> gaussian_vector(uint64_t seed, uint64_t index, int n)
{
	std::vector<double> g(n);
	for (int i = 0; i < n; i += 2) {
		double u1 = uniform01(seed, index, 2 * i);
		double u2 = uniform01(seed, index, 2 * i + 1);
		double r = std::sqrt(-2.0 * std::log(u1));
		g[i] = r * std::cos(2.0 * M_PI * u2);
		if (i + 1 < n)
			g[i + 1] = r * std::sin(2.0 * M_PI * u2);
	}
	return g;
}

double real_det_sign(std::vector<std::vector<double>> m)
{
	size_t n = m.size();
	double det = 1;
	for (size_t col = 0; col < n; ++col) {
		size_t piv = col;
		for (size_t r = col + 1; r < n; ++r)
			if (std::abs(m[r][col]) > std::abs(m[piv][col]))
				piv = r;
		if (m[piv][col] == 0.0)
			return 0;
		if (piv != col) {
			std::swap(m[piv], m[col]);
			det = -det;
		}
		det *= m[col][col];
		for (size_t r = col + 1; r < n; ++r) {
			double f = m[r][col] / m[col][col];
			for (size_t s = col; s < n; ++s)
				m[r][s] -= f * m[col][s];
		}
	}
	return det > 0 ? 1 : -1;
}

} // namespace

MonteCarloEstimate sphere_integrate_mc(const EquivariantForm &w, long long samples, uint64_t seed)
{
	if (samples <= 0)
		throw std::invalid_argument("sphere_integrate_mc: samples must be positive");
	int l = w.rank();
	int dim = 2 * l;
	if (w.has_dt())
		throw std::invalid_argument("sphere_integrate_mc: dt generator present");
	double vol = 2.0 * std::pow(M_PI, l) / to_double(factorial(unsigned(l - 1)));

	std::complex<double> sum = 0;
	double sum_re2 = 0, sum_im2 = 0;
	for (long long n = 0; n < samples; ++n) {
		auto g = gaussian_vector(seed, uint64_t(n), dim);
		double norm = 0;
		for (double x : g)
			norm += x * x;
		norm = std::sqrt(norm);
		if (norm == 0.0)
			continue;
		for (double &x : g)
			x /= norm;

		// Householder reflection mapping e_1 to +-point; the images of
		// e_2..e_{2l} give an orthonormal tangent frame either way (the
		// sign choice keeps the reflection well conditioned)
		double s = g[0] >= 0 ? 1.0 : -1.0;
		std::vector<double> v = g;
		v[0] += s;
		double vn2 = 2.0 * (1.0 + std::abs(g[0]));
		std::vector<std::vector<double>> frame_real(dim - 1, std::vector<double>(dim));
		for (int jcol = 1; jcol < dim; ++jcol)
			for (int i = 0; i < dim; ++i)
				frame_real[jcol - 1][i] =
				    (i == jcol ? 1.0 : 0.0) - 2.0 * v[i] * v[jcol] / vn2;

		// orientation of [point | frame] relative to the standard basis;
		// T_01 carries the opposite of the boundary orientation
		std::vector<std::vector<double>> omat(dim, std::vector<double>(dim));
		for (int i = 0; i < dim; ++i) {
			omat[i][0] = g[i];
			for (int jcol = 1; jcol < dim; ++jcol)
				omat[i][jcol] = frame_real[jcol - 1][i];
		}
		double orient = -real_det_sign(omat);

		// complex coordinates: point and tangent vectors
		std::vector<std::complex<double>> z(l);
		for (int i = 0; i < l; ++i)
			z[i] = {g[2 * i], g[2 * i + 1]};
		std::vector<std::vector<std::complex<double>>> frame(dim - 1,
		                                                     std::vector<std::complex<double>>(l));
		for (int s = 0; s < dim - 1; ++s)
			for (int i = 0; i < l; ++i)
				frame[s][i] = {frame_real[s][2 * i], frame_real[s][2 * i + 1]};

		auto val = orient * eval_on_frame(w, z, frame, nullptr, M_PI);
		sum += val;
		sum_re2 += val.real() * val.real();
		sum_im2 += val.imag() * val.imag();
	}
	double n = double(samples);
	std::complex<double> mean = sum / n;
	double var_re = std::max(0.0, sum_re2 / n - mean.real() * mean.real());
	double var_im = std::max(0.0, sum_im2 / n - mean.imag() * mean.imag());
	double se = vol * std::sqrt((var_re + var_im) / n);
	return {mean * vol, se, samples};
}

RationalCoefficient fiber_integrate_triple(const CechTriple &t)
{
	if (!t.is_relative())
		throw std::invalid_argument("fiber_integrate_triple: triple must be relative");
	int l = t.rank();
	RationalCoefficient r = ball_integrate_exact(t.xi1.form_degree_piece(2 * l));
	r += sphere_integrate_exact_any_degree(t.xi01.form_degree_piece(2 * l - 1));
	return r;
}

RationalCoefficient projection_formula_check(const CechTriple &alpha, const Scalar &beta)
{
	int l = alpha.rank();
	CechTriple scaled(alpha.xi0 * beta, alpha.xi1 * beta, alpha.xi01 * beta, alpha.degree,
	                  alpha.representation);
	return fiber_integrate_triple(scaled) -
	       fiber_integrate_triple(alpha) * RationalCoefficient(l, beta);
}

} // namespace equithom
