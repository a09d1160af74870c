#include "equithom/verify.hpp"

#include "equithom/bm_kernel.hpp"
#include "equithom/chern_weil.hpp"
#include "equithom/sampling.hpp"
#include "equithom/sphere_integration.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <future>
#include <sstream>

namespace equithom {

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch
{
	Clock::time_point start = Clock::now();
	double ms() const
	{
		return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
	}
};

CheckResult make_check(const std::string &name, int l, bool pass, std::string residual,
                       const Stopwatch &sw)
{
	return {name, l, pass, std::move(residual), sw.ms()};
}

std::string zero_residual(const EquivariantForm &f)
{
	if (f.is_zero())
		return "exact zero";
	return "nonzero residual with " + std::to_string(f.terms().size()) + " generator sets";
}

std::string zero_residual(const FormMatrix &m)
{
	if (form_matrix_is_zero(m))
		return "exact zero matrix";
	int nonzero = 0;
	for (const auto &row : m)
		for (const auto &f : row)
			if (!f.is_zero())
				++nonzero;
	return "nonzero in " + std::to_string(nonzero) + " entries";
}

// ---------------------------------------------------------------- closedness

std::vector<CheckResult> suite_closedness(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = opt.l_min; l <= l_max; ++l) {
		{
			Stopwatch sw;
			CechTriple d = d_eq_triple(thom_cocycle(l));
			out.push_back(make_check("closedness.thom-cocycle", l, d.is_zero(),
			                         d.is_zero() ? "exact zero triple" : "nonzero triple", sw));
		}
		{
			Stopwatch sw;
			EquivariantForm defect = d_eq(beta_eq(l)) - chi_eq(l);
			out.push_back(make_check("closedness.d-eq-beta-equals-chi", l, defect.is_zero(),
			                         zero_residual(defect), sw));
		}
		{
			Stopwatch sw;
			EquivariantForm c_top = chern_form(builtin_d0(l), l);
			out.push_back(make_check("closedness.top-chern-of-frame-trivial", l,
			                         c_top.is_zero(), zero_residual(c_top), sw));
		}
	}
	return out;
}

// -------------------------------------------------------------------- oracle

EquivariantForm beta_oracle(int l)
{
	return bott_difference(SimplexFamily({builtin_d0(l), builtin_d1(l)}), l);
}

// the rank-two six-term display, built literally term by term. The
// published Example carries the cross terms as -X_12 zb2 dz1 - X_21 zb1 dz2;
// the form that is actually closed and equivariant (and equal to the
// transgression) has those two X indices transposed. Both variants are
// produced so the literal check can certify that the difference is exactly
// the documented transposition and nothing else.
EquivariantForm literal_rank2_display(bool as_published)
{
	int l = 2;
	auto gen = [&](GenKind k, int i) { return EquivariantForm::generator(l, {k, i}); };
	auto xvar = [&](int a, int b) { return Polynomial::variable(x_var(a, b)); };

	EquivariantForm f =
	    wedge(wedge(gen(GenKind::dzb, 2), gen(GenKind::dz, 1)), gen(GenKind::dz, 2)) *
	        RationalCoefficient(l, Polynomial::variable(zb_var(1)), 2) -
	    wedge(wedge(gen(GenKind::dzb, 1), gen(GenKind::dz, 1)), gen(GenKind::dz, 2)) *
	        RationalCoefficient(l, Polynomial::variable(zb_var(2)), 2);
	f += gen(GenKind::dz, 2) * RationalCoefficient(l, xvar(1, 1) * Polynomial::variable(zb_var(2)), 1);
	f += gen(GenKind::dz, 1) * RationalCoefficient(l, xvar(2, 2) * Polynomial::variable(zb_var(1)), 1);
	int cross_dz1 = as_published ? 0 : 1; // X_12 vs X_21 on the zb2 dz1 term
	f -= gen(GenKind::dz, 1) *
	     RationalCoefficient(l, (cross_dz1 ? xvar(2, 1) : xvar(1, 2)) *
	                                Polynomial::variable(zb_var(2)),
	                         1);
	f -= gen(GenKind::dz, 2) *
	     RationalCoefficient(l, (cross_dz1 ? xvar(1, 2) : xvar(2, 1)) *
	                                Polynomial::variable(zb_var(1)),
	                         1);
	return f * Scalar::i_over_two_pi(2);
}

// --- the rank-two real-part spot check ---------------------------------
//
// Real 3-forms on R^4 in the basis dx1, dy1, dx2, dy2 (indices 0..3).
// Coefficient factors: index into {x1, y1, x2, y2} (0..3); parameter
// factor: 0 = none, 1..4 = A, B, C, D. The published Example display is
// kept verbatim; the normalized version (what beta_eq actually equals,
// certified against the transgression oracle and the sphere integral) is
// derived from it by the documented errata listed at
// normalized_real_display below.

struct RealTerm
{
	int param;      // 0 none, 1 A, 2 B, 3 C, 4 D
	int coord;      // factor x1/y1/x2/y2 as 0..3
	int sign;       // +-1
	int basis[3];   // increasing indices into dx1,dy1,dx2,dy2 for 3-forms
	int denom_exp;  // sigma power
	int denom_coef; // 2 or 4 (the 1/(2 pi^2) resp. 1/(4 pi^2) prefactor)
};

// indices: x1=0, y1=1, x2=2, y2=3; basis dx1=0, dy1=1, dx2=2, dy2=3
// clang-format off
const RealTerm kPublishedRealDisplay[] = {
    // 1/(2 pi^2 |z|^4) group
    {0, 0, +1, {1, 2, 3}, 2, 2}, // wedge reordered: x1 dx2^dy1^dy2 = -x1 dy1^dx2^dy2
    {0, 2, +1, {0, 1, 3}, 2, 2}, // x2 dx1^dy1^dy2
    {0, 1, -1, {0, 2, 3}, 2, 2}, // -y1 dx1^dx2^dy2
    {0, 3, -1, {0, 1, 2}, 2, 2}, // -y2 dx1^dx2^dy1  (dx1^dy1^dx2 reordered)
    // 1/(4 pi^2 |z|^2) group
    {1, 2, -1, {3, -1, -1}, 1, 4}, // -A x2 dy2
    {1, 3, +1, {2, -1, -1}, 1, 4}, // +A y2 dx2
    {2, 0, +1, {2, -1, -1}, 1, 4}, // +B x1 dx2
    {2, 1, +1, {3, -1, -1}, 1, 4}, // +B y1 dy2
    {2, 2, -1, {0, -1, -1}, 1, 4}, // -B x2 dx1
    {2, 3, -1, {1, -1, -1}, 1, 4}, // -B y2 dy1
    {3, 0, +1, {3, -1, -1}, 1, 4}, // +C x1 dy2
    {3, 1, -1, {2, -1, -1}, 1, 4}, // -C y1 dx2
    {3, 2, +1, {1, -1, -1}, 1, 4}, // +C x2 dy1
    {3, 3, -1, {0, -1, -1}, 1, 4}, // -C y2 dx1
    {4, 0, -1, {1, -1, -1}, 1, 4}, // -D x1 dy1
    {4, 3, +1, {2, -1, -1}, 1, 4}, // +D y2 dx2
};
// clang-format on

// The errata normalization taking the published display to the real part
// of the corrected kernel: in the cubic group the x2 and y1 terms flip;
// in the X-linear group the A, C and D terms flip while the B terms stay
// (the global flip composed with the B-flip coming from the X_12 <-> X_21
// transposition), and the last D term reads y1 dx1 for the display's
// y2 dx2.
std::vector<RealTerm> normalized_real_display()
{
	std::vector<RealTerm> v(std::begin(kPublishedRealDisplay), std::end(kPublishedRealDisplay));
	v[1].sign = -v[1].sign; // x2 term
	v[2].sign = -v[2].sign; // y1 term
	for (size_t i = 4; i < v.size(); ++i)
		if (v[i].param != 2)
			v[i].sign = -v[i].sign; // A, C, D flip; B stays
	v[15].coord = 1;                // D y1 dx1
	v[15].basis[0] = 0;
	return v;
}

// wedge ordering inside the display entries: the table stores increasing
// basis triples; reordering signs are folded in below for the two terms
// the published display writes in non-increasing order
double eval_real_display(const std::vector<RealTerm> &terms, const double p[4],
                         const double abcd[4], const std::vector<std::array<double, 4>> &vecs,
                         int nvec)
{
	double sigma = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
	double pi = M_PI;
	double total = 0;
	for (const auto &t : terms) {
		int deg = t.denom_exp == 2 ? 3 : 1;
		if (deg != nvec)
			continue;
		double c = t.sign * p[t.coord];
		if (t.param > 0)
			c *= abcd[t.param - 1];
		c /= t.denom_coef * pi * pi * std::pow(sigma, t.denom_exp);
		// determinant of the selected components
		if (deg == 1) {
			c *= vecs[0][t.basis[0]];
		} else {
			double m[3][3];
			for (int r = 0; r < 3; ++r)
				for (int s = 0; s < 3; ++s)
					m[r][s] = vecs[s][t.basis[r]];
			c *= m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
			     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
			     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
		}
		total += c;
	}
	return total;
}

double random01(Rng &rng)
{
	return double(rng.next() >> 11) * 0x1.0p-53;
}

CheckResult spot_check_rank2(const SuiteOptions &opt)
{
	Stopwatch sw;
	EquivariantForm beta = beta_eq(2);
	auto published = std::vector<RealTerm>(std::begin(kPublishedRealDisplay), std::end(kPublishedRealDisplay));
	// fold in the reordering signs for the two display terms written in
	// non-increasing basis order: x1 dx2^dy1^dy2 and y2 dx1^dy1^dx2
	published[0].sign = -published[0].sign;
	published[3].sign = -published[3].sign;
	auto normalized = normalized_real_display();
	normalized[0].sign = -normalized[0].sign;
	normalized[3].sign = -normalized[3].sign;

	Rng rng(opt.seed ^ 0x5b07c12ull);
	double max_err_normalized = 0;
	double max_gap_raw = 0;
	for (int n = 0; n < opt.spot_points; ++n) {
		double p[4], abcd[4];
		for (double &x : p)
			x = 2 * random01(rng) - 1;
		double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
		if (norm < 0.3) {
			p[0] += 0.5;
			norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
		}
		for (double &x : abcd)
			x = 2 * random01(rng) - 1;
		int nvec = n % 2 == 0 ? 3 : 1; // alternate between the two strata
		std::vector<std::array<double, 4>> vecs(nvec);
		for (auto &v : vecs)
			for (double &x : v)
				x = 2 * random01(rng) - 1;

		// beta_eq value (complex), on the complexified point and vectors
		std::vector<std::complex<double>> z = {{p[0], p[1]}, {p[2], p[3]}};
		std::vector<std::vector<std::complex<double>>> frame;
		for (const auto &v : vecs)
			frame.push_back({{v[0], v[1]}, {v[2], v[3]}});
		auto x_point = [&](Var v) -> std::complex<double> {
			double A = abcd[0], B = abcd[1], C = abcd[2], D = abcd[3];
			if (var_a(v) == 1 && var_b(v) == 1)
				return {0, A};
			if (var_a(v) == 1 && var_b(v) == 2)
				return {B, C};
			if (var_a(v) == 2 && var_b(v) == 1)
				return {-B, C};
			return {0, D};
		};
		auto piece = nvec == 3 ? beta.set_x_zero() : beta - beta.set_x_zero();
		double mine = eval_on_frame(piece.form_degree_piece(nvec), z, frame, x_point, M_PI).real();
		double raw = eval_real_display(published, p, abcd, vecs, nvec);
		double corrected = eval_real_display(normalized, p, abcd, vecs, nvec);
		max_err_normalized = std::max(max_err_normalized, std::abs(mine - corrected));
		max_gap_raw = std::max(max_gap_raw, std::abs(mine - raw));
	}
	// pass iff beta_eq matches the errata-normalized display and the raw
	// published display really does differ by the documented sign set
	bool pass = max_err_normalized <= opt.spot_tol && max_gap_raw > opt.spot_tol;
	std::ostringstream os;
	os << "matches the errata-normalized display, max |err| = " << max_err_normalized
	   << "; published display differs as documented (sign flips on the x2 and y1 cubic terms "
	      "and on the A, C, D linear groups, D-term variable), max gap = "
	   << max_gap_raw;
	return make_check("oracle.rank2-real-part-spot-check", 2, pass, os.str(), sw);
}

std::vector<CheckResult> suite_oracle(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = opt.l_min; l <= l_max; ++l) {
		Stopwatch sw;
		EquivariantForm defect = beta_eq(l) - beta_oracle(l);
		out.push_back(make_check("oracle.kernel-equals-transgression", l, defect.is_zero(),
		                         defect.is_zero()
		                             ? "exact equality, sign normalization = identity"
		                             : zero_residual(defect),
		                         sw));
	}
	if (opt.l_min <= 2 && 2 <= l_max) {
		Stopwatch sw;
		EquivariantForm beta = beta_eq(2);
		bool matches_corrected = (beta - literal_rank2_display(false)).is_zero();
		// the published display must differ by exactly the documented
		// transposition of the two X cross terms and nothing else
		EquivariantForm gap = beta - literal_rank2_display(true);
		auto xvar = [&](int a, int b) { return Polynomial::variable(x_var(a, b)); };
		EquivariantForm documented_gap =
		    (EquivariantForm::generator(2, {GenKind::dz, 1}) *
		         RationalCoefficient(2, (xvar(1, 2) - xvar(2, 1)) *
		                                    Polynomial::variable(zb_var(2)),
		                             1) +
		     EquivariantForm::generator(2, {GenKind::dz, 2}) *
		         RationalCoefficient(2, (xvar(2, 1) - xvar(1, 2)) *
		                                    Polynomial::variable(zb_var(1)),
		                             1)) *
		    Scalar::i_over_two_pi(2);
		bool gap_documented = (gap - documented_gap).is_zero();
		out.push_back(make_check(
		    "oracle.rank2-literal-six-terms", 2, matches_corrected && gap_documented,
		    matches_corrected
		        ? "termwise equality with the corrected display; the published Example "
		          "differs by exactly the documented X_12 <-> X_21 transposition in the "
		          "two cross terms"
		        : zero_residual(beta - literal_rank2_display(false)),
		    sw));
		out.push_back(spot_check_rank2(opt));
	}
	return out;
}

// ------------------------------------------------------------------- bianchi

std::vector<CheckResult> suite_bianchi(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = opt.l_min; l <= l_max; ++l) {
		{
			Stopwatch sw;
			FormMatrix d0 = bianchi_defect(builtin_d0(l));
			out.push_back(make_check("bianchi.frame-trivial-connection", l,
			                         form_matrix_is_zero(d0), zero_residual(d0), sw));
		}
		{
			Stopwatch sw;
			FormMatrix d1 = bianchi_defect(builtin_d1(l));
			out.push_back(make_check("bianchi.flat-frame-connection", l, form_matrix_is_zero(d1),
			                         zero_residual(d1), sw));
		}
		{
			Stopwatch sw;
			Rng rng(opt.seed + l);
			bool ok = true;
			int count = 20;
			for (int n = 0; n < count && ok; ++n) {
				Connection c = random_invariant_connection(l, rng, n % 3 == 0);
				ok = form_matrix_is_zero(bianchi_defect(c));
			}
			out.push_back(make_check("bianchi.randomized-invariant-connections", l, ok,
			                         ok ? "exact zero for 20 samples" : "nonzero defect", sw));
		}
	}

	// transgression properties on randomized invariant families
	int bott_l_max = std::min(l_max, 2);
	for (int l = opt.l_min; l <= bott_l_max; ++l) {
		Rng rng(opt.seed * 3 + l);
		{
			Stopwatch sw;
			bool ok = true;
			for (int n = 0; n < 5 && ok; ++n) {
				Connection a = random_invariant_connection(l, rng);
				Connection b = random_invariant_connection(l, rng);
				for (int k = 1; k <= l && ok; ++k) {
					EquivariantForm fwd = bott_difference(SimplexFamily({a, b}), k);
					EquivariantForm bwd = bott_difference(SimplexFamily({b, a}), k);
					ok = (fwd + bwd).is_zero();
				}
			}
			out.push_back(make_check("bott.alternating-pairs", l, ok,
			                         ok ? "swap negates, exact" : "not alternating", sw));
		}
		{
			Stopwatch sw;
			bool ok = true;
			for (int n = 0; n < 3 && ok; ++n) {
				Connection a = random_invariant_connection(l, rng);
				Connection b = random_invariant_connection(l, rng);
				Connection c = random_invariant_connection(l, rng);
				for (int k = 1; k <= l && ok; ++k) {
					EquivariantForm fwd = bott_difference(SimplexFamily({a, b, c}), k);
					EquivariantForm swapped = bott_difference(SimplexFamily({b, a, c}), k);
					ok = (fwd + swapped).is_zero();
				}
			}
			out.push_back(make_check("bott.alternating-triples", l, ok,
			                         ok ? "swap negates, exact" : "not alternating", sw));
		}
		{
			Stopwatch sw;
			bool ok = true;
			for (int p = 1; p <= 2 && ok; ++p)
				for (int n = 0; n < 3 && ok; ++n) {
					std::vector<Connection> fam;
					for (int m = 0; m <= p; ++m)
						fam.push_back(random_invariant_connection(l, rng));
					for (int k = 1; k <= l && ok; ++k)
						ok = bott_cocycle_defect(SimplexFamily(fam), k).is_zero();
				}
			out.push_back(make_check("bott.cocycle-relation", l, ok,
			                         ok ? "exact zero, p = 1 and 2" : "nonzero defect", sw));
		}
	}
	return out;
}

// -------------------------------------------------------------- equivariance

std::vector<CheckResult> suite_equivariance(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = opt.l_min; l <= l_max; ++l) {
		Stopwatch sw;
		EquivariantForm beta = beta_eq(l);
		bool ok = true;
		for (int a = 1; a <= l && ok; ++a)
			for (int b = 1; b <= l && ok; ++b)
				ok = total_lie_derivative(beta, a, b).is_zero();
		out.push_back(make_check("equivariance.kernel-all-directions", l, ok,
		                         ok ? "exact zero for all l^2 directions" : "nonzero defect",
		                         sw));
	}
	return out;
}

// ------------------------------------------------------------------ integral

std::vector<CheckResult> suite_integral(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = opt.l_min; l <= l_max; ++l) {
		{
			Stopwatch sw;
			RationalCoefficient v = sphere_integrate_exact(beta_eq(l).top_form_degree_piece());
			bool ok = v == RationalCoefficient(l, 1);
			out.push_back(make_check("integral.exact-equals-one", l, ok,
			                         ok ? "exactly 1" : "got " + v.str(), sw));
		}
		{
			// degree guard: every positive X-stratum must be rejected
			Stopwatch sw;
			auto strata = beta_eq(l).x_strata();
			bool ok = true;
			std::string note = "all strata of form degree 2l-1-2p; guard rejects p >= 1";
			for (const auto &[p, piece] : strata) {
				if (!piece.is_form_homogeneous(2 * l - 1 - 2 * p)) {
					ok = false;
					note = "stratum p=" + std::to_string(p) + " has wrong form degree";
					break;
				}
				if (p >= 1) {
					bool rejected = false;
					try {
						sphere_integrate_exact(piece);
					} catch (const std::invalid_argument &) {
						rejected = true;
					}
					if (!rejected) {
						ok = false;
						note = "degree guard accepted stratum p=" + std::to_string(p);
						break;
					}
					if (!sphere_integrate_exact_any_degree(piece).is_zero()) {
						ok = false;
						note = "lower stratum integrates to nonzero";
						break;
					}
				}
			}
			out.push_back(make_check("integral.degree-bookkeeping", l, ok, note, sw));
		}
	}
	if (opt.l_min <= 2 && 2 <= l_max) {
		Stopwatch sw;
		auto est = sphere_integrate_mc(beta_eq(2).top_form_degree_piece(), opt.mc_samples,
		                               opt.seed);
		double err = std::abs(est.value - std::complex<double>(1, 0));
		bool ok = err <= opt.mc_sigma * est.stderr_1sigma + opt.mc_floor;
		std::ostringstream os;
		os << "estimate " << est.value.real() << (est.value.imag() < 0 ? "-" : "+")
		   << std::abs(est.value.imag()) << "i, sigma " << est.stderr_1sigma << ", |err| "
		   << err << " (band 3 sigma + " << opt.mc_floor << " rounding floor)";
		out.push_back(make_check("integral.monte-carlo-cross-check", 2, ok, os.str(), sw));
	}
	return out;
}

// ------------------------------------------------------------------------ rr

std::vector<CheckResult> suite_rr(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = std::max(1, opt.l_min); l <= l_max; ++l) {
		Stopwatch sw;
		int n = opt.rr_truncation > 0 ? opt.rr_truncation : 2 * l + 2;
		bool ok = ch_alternating_lambda(l, n) == c_top_times_todd_inv(l, n);
		out.push_back(make_check("rr.alternating-ch-identity", l, ok,
		                         ok ? "exact series equality at truncation " +
		                                  std::to_string(n)
		                            : "series differ",
		                         sw));
	}
	{
		Stopwatch sw;
		ChernBasisPolynomial td = to_chern_basis(todd_series(2, 2));
		ChernBasisPolynomial expected = {
		    {{0, 0}, Rational(1)},
		    {{1, 0}, Rational(1, 2)},
		    {{2, 0}, Rational(1, 12)},
		    {{0, 1}, Rational(1, 12)},
		};
		bool ok = td == expected;
		out.push_back(make_check("rr.todd-in-chern-basis", 2, ok,
		                         ok ? "1 + c1/2 + (c1^2+c2)/12" : "unexpected expansion", sw));
	}
	return out;
}

// ---------------------------------------------------------------------- cech

std::vector<CheckResult> suite_cech(const SuiteOptions &opt, int l_max)
{
	std::vector<CheckResult> out;
	for (int l = opt.l_min; l <= l_max; ++l) {
		Rng rng(opt.seed * 7 + l);
		Stopwatch sw;
		bool dd_ok = true, leibniz_ok = true;
		int triples = 25;
		for (int n = 0; n < triples && dd_ok && leibniz_ok; ++n) {
			int r = rng.uniform_int(1, 3);
			CechTriple a = random_cech_triple(l, r, rng);
			dd_ok = d_eq_triple(d_eq_triple(a)).is_zero();

			CechTriple b = random_cech_triple(l, rng.uniform_int(1, 2), rng);
			CechTriple lhs = d_eq_triple(cup(a, b));
			CechTriple t1 = cup(d_eq_triple(a), b);
			CechTriple t2 = cup(a, d_eq_triple(b));
			EquivariantForm s = r % 2 ? -EquivariantForm::unit(l) : EquivariantForm::unit(l);
			leibniz_ok = (lhs.xi0 - t1.xi0 - wedge(s, t2.xi0)).is_zero() &&
			             (lhs.xi1 - t1.xi1 - wedge(s, t2.xi1)).is_zero() &&
			             (lhs.xi01 - t1.xi01 - wedge(s, t2.xi01)).is_zero();
		}
		out.push_back(make_check("cech.d-eq-squared", l, dd_ok,
		                         dd_ok ? "exact zero on 25 random triples" : "nonzero", sw));
		out.push_back(make_check("cech.cup-leibniz", l, leibniz_ok,
		                         leibniz_ok ? "exact identity on 25 random pairs" : "violated",
		                         sw));
	}
	return out;
}

} // namespace

std::vector<std::string> suite_names()
{
	return {"closedness", "oracle", "bianchi", "equivariance", "integral", "rr", "cech"};
}

bool is_suite_name(const std::string &name)
{
	for (const auto &s : suite_names())
		if (s == name)
			return true;
	return name == "all";
}

int suite_default_l_max(const std::string &name)
{
	if (name == "rr")
		return 4;
	if (name == "equivariance" || name == "cech")
		return 2;
	return 3; // the oracle at rank 4 is a slow opt-in
}

int suite_l_ceiling(const std::string &name)
{
	// rank 4 is the documented performance ceiling of the determinant
	// expansions; the random-form pool behind the cech suite stops at 3
	if (name == "cech")
		return 3;
	return 4;
}

std::vector<CheckResult> run_suite(const std::string &name, const SuiteOptions &opt)
{
	if (name == "all") {
		// suites are independent and pure; run them concurrently and join
		// in the fixed suite order so the report stays deterministic
		std::vector<std::future<std::vector<CheckResult>>> futures;
		for (const auto &s : suite_names())
			futures.push_back(std::async(std::launch::async,
			                             [s, &opt] { return run_suite(s, opt); }));
		std::vector<CheckResult> out;
		for (auto &f : futures) {
			auto part = f.get();
			out.insert(out.end(), part.begin(), part.end());
		}
		return out;
	}
	int l_max = opt.l_max > 0 ? opt.l_max : suite_default_l_max(name);
	if (l_max > suite_l_ceiling(name))
		throw std::invalid_argument("suite '" + name + "' supports l <= " +
		                            std::to_string(suite_l_ceiling(name)));
	if (name == "closedness")
		return suite_closedness(opt, l_max);
	if (name == "oracle")
		return suite_oracle(opt, l_max);
	if (name == "bianchi")
		return suite_bianchi(opt, l_max);
	if (name == "equivariance")
		return suite_equivariance(opt, l_max);
	if (name == "integral")
		return suite_integral(opt, l_max);
	if (name == "rr")
		return suite_rr(opt, l_max);
	if (name == "cech")
		return suite_cech(opt, l_max);
	throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<std::pair<std::string, std::vector<CheckResult>>>
acceptance_criteria(const SuiteOptions &base)
{
	std::vector<std::pair<std::string, std::vector<CheckResult>>> out;
	SuiteOptions opt = base;

	auto filter = [](const std::vector<CheckResult> &checks, const std::string &prefix) {
		std::vector<CheckResult> r;
		for (const auto &c : checks)
			if (c.name.rfind(prefix, 0) == 0)
				r.push_back(c);
		return r;
	};

	opt.l_min = 1;
	opt.l_max = 3;
	auto oracle = run_suite("oracle", opt);
	out.emplace_back("1. oracle equivalence: kernel = transgression of (D0, D1), l = 1..3",
	                 filter(oracle, "oracle.kernel-equals-transgression"));
	out.emplace_back("2. Thom cocycle closedness, l = 1..3", run_suite("closedness", opt));

	auto integral = run_suite("integral", opt);
	std::vector<CheckResult> c3 = filter(integral, "integral.exact-equals-one");
	for (const auto &c : filter(integral, "integral.monte-carlo-cross-check"))
		c3.push_back(c);
	out.emplace_back("3. sphere integral of the top stratum = 1 exactly, MC within 3 sigma", c3);

	std::vector<CheckResult> c4 = filter(oracle, "oracle.rank2-literal-six-terms");
	for (const auto &c : filter(oracle, "oracle.rank2-real-part-spot-check"))
		c4.push_back(c);
	out.emplace_back("4. rank-two literal display match + real-part spot check", c4);

	auto bianchi = run_suite("bianchi", opt);
	std::vector<CheckResult> c5 = filter(bianchi, "bianchi.");
	out.emplace_back("5. Bianchi identity: built-ins and 20 randomized connections, l = 1..3",
	                 c5);
	out.emplace_back("6. transgression alternating + cocycle properties, l <= 2, p <= 2",
	                 filter(bianchi, "bott."));

	opt.l_max = 2;
	out.emplace_back("7. equivariance of the kernel in all l^2 directions, l <= 2",
	                 run_suite("equivariance", opt));
	out.emplace_back("8. Cech differential and cup Leibniz on randomized triples, l <= 2",
	                 run_suite("cech", opt));

	opt.l_max = 4;
	out.emplace_back("9. Riemann-Roch series identity, l = 1..4, and Todd in the Chern basis",
	                 run_suite("rr", opt));

	opt.l_max = 3;
	out.emplace_back("10. degree bookkeeping of the kernel strata + integrator degree guard",
	                 filter(integral, "integral.degree-bookkeeping"));
	return out;
}

Json report_json(const std::string &suite, const SuiteOptions &opt,
                 const std::vector<CheckResult> &checks, bool include_timings)
{
	Json arr = Json::array();
	for (const auto &c : checks) {
		Json j;
		j["name"] = c.name;
		j["l"] = c.l;
		j["status"] = c.pass ? "pass" : "fail";
		j["residualDescription"] = c.residual;
		if (include_timings)
			j["wallTimeMs"] = c.wall_ms;
		arr.push_back(std::move(j));
	}
	Json r;
	r["toolVersion"] = kToolVersion;
	r["suite"] = suite;
	r["seed"] = opt.seed;
	r["checks"] = std::move(arr);
	r["allPass"] = all_pass(checks);
	return r;
}

bool all_pass(const std::vector<CheckResult> &checks)
{
	for (const auto &c : checks)
		if (!c.pass)
			return false;
	return true;
}

} // namespace equithom
