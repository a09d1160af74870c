// Command-line workbench: emit the equivariant kernel/cocycle in several
// formats, run the verification suites, and run sphere integrations.
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include "equithom/bm_kernel.hpp"
#include "equithom/latex_io.hpp"
#include "equithom/sphere_integration.hpp"
#include "equithom/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace equithom;

int verbosity()
{
	const char *v = std::getenv("EQUITHOM_VERBOSE");
	return v ? std::atoi(v) : 0;
}

// "2" or "1..3"
std::pair<int, int> parse_l_range(const std::string &s)
{
	auto dots = s.find("..");
	if (dots == std::string::npos) {
		int l = std::stoi(s);
		return {l, l};
	}
	return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int cmd_kernel(int l, const std::string &format)
{
	EquivariantForm beta = beta_eq(l);
	EquivariantForm chi = chi_eq(l);
	if (format == "latex") {
		std::cout << "\\beta_{eq}(X) = " << latex(beta) << "\n";
		std::cout << "\\chi_{eq}(X) = " << latex(chi) << "\n";
	} else if (format == "json") {
		Json j;
		j["l"] = l;
		j["betaEq"] = to_json(beta);
		j["chiEq"] = to_json(chi);
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << "(kernel (l " << l << ") (beta-eq " << sexpr(beta) << ") (chi-eq "
		          << sexpr(chi) << "))\n";
	}
	return 0;
}

int cmd_verify(const std::string &suite, const std::string &l_range, SuiteOptions opt,
               const std::string &json_path)
{
	if (!l_range.empty()) {
		auto [lo, hi] = parse_l_range(l_range);
		if (lo < 1 || hi < lo)
			throw std::invalid_argument("--l: expected a rank or range like 2 or 1..3");
		opt.l_min = lo;
		opt.l_max = hi;
	}
	auto checks = run_suite(suite, opt);
	for (const auto &c : checks) {
		std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " (l=" << c.l << ")";
		if (verbosity() > 0)
			std::cout << "  -- " << c.residual;
		std::cout << "\n";
	}
	bool ok = all_pass(checks);
	std::cout << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
	          << checks.size() << " checks)\n";
	if (!json_path.empty()) {
		Json j = report_json(suite, opt, checks);
		if (json_path == "-") {
			std::cout << j.dump(2) << "\n";
		} else {
			std::ofstream f(json_path);
			f << j.dump(2) << "\n";
		}
	}
	return ok ? 0 : 1;
}

int cmd_integrate(int l, const std::string &method, long long samples, uint64_t seed)
{
	EquivariantForm top = beta_eq(l).top_form_degree_piece();
	Json j;
	j["l"] = l;
	j["method"] = method;
	if (method == "exact") {
		RationalCoefficient v = sphere_integrate_exact(top);
		// the top stratum is X-free, so the value is a plain Scalar
		std::string value = v == RationalCoefficient(l, 1) ? "1" : v.str();
		std::cout << "exact integral over the fiber sphere: " << value << "\n";
		j["value"] = value;
	} else {
		auto est = sphere_integrate_mc(top, samples, seed);
		std::cout << "mc estimate: " << est.value.real() << " + " << est.value.imag()
		          << "i  (1 sigma = " << est.stderr_1sigma << ", samples = " << est.samples
		          << ", seed = " << seed << ")\n";
		j["value"] = {est.value.real(), est.value.imag()};
		j["stderr"] = est.stderr_1sigma;
		j["samples"] = est.samples;
		j["seed"] = seed;
	}
	std::cout << j.dump(2) << "\n";
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact Cartan-model workbench for the universal U(l)-equivariant "
	             "Thom/angular kernel on C^l"};
	app.require_subcommand(1);

	// kernel
	auto *kernel = app.add_subcommand("kernel", "emit beta_eq and chi_eq");
	int kernel_l = 1;
	std::string kernel_format = "latex";
	kernel->add_option("--l", kernel_l, "rank, 1..4")->required()->check(CLI::Range(1, 4));
	kernel->add_option("--format", kernel_format, "latex|json|sexpr")
	    ->check(CLI::IsMember({"latex", "json", "sexpr"}));

	// verify
	auto *verify = app.add_subcommand("verify", "run a verification suite");
	std::string suite = "all", l_range, json_path;
	SuiteOptions opt;
	verify->add_option("--suite", suite,
	                   "all|closedness|oracle|bianchi|equivariance|integral|rr|cech")
	    ->check(CLI::IsMember({"all", "closedness", "oracle", "bianchi", "equivariance",
	                           "integral", "rr", "cech"}));
	verify->add_option("--l", l_range, "rank or range, e.g. 2 or 1..3");
	verify->add_option("--seed", opt.seed, "seed for randomized checks");
	verify->add_option("--mc-samples", opt.mc_samples, "Monte Carlo sample count")
	    ->check(CLI::PositiveNumber);
	verify->add_option("--mc-sigma", opt.mc_sigma, "Monte Carlo acceptance band in sigmas");
	verify->add_option("--mc-floor", opt.mc_floor,
	                   "additive rounding floor on the Monte Carlo band");
	verify->add_option("--spot-points", opt.spot_points, "points for the rank-two spot check");
	verify->add_option("--spot-tol", opt.spot_tol, "tolerance for the rank-two spot check");
	verify->add_option("--rr-truncation", opt.rr_truncation,
	                   "series truncation for the rr suite (default 2l+2)");
	verify->add_option("--json", json_path, "write the report JSON here ('-' for stdout)");

	// integrate
	auto *integrate = app.add_subcommand("integrate", "integrate the kernel over the sphere");
	int int_l = 1;
	std::string method = "exact";
	long long samples = 0;
	uint64_t seed = 20260809;
	integrate->add_option("--l", int_l, "rank, 1..3")->required()->check(CLI::Range(1, 3));
	integrate->add_option("--method", method, "exact|mc")
	    ->check(CLI::IsMember({"exact", "mc"}));
	integrate->add_option("--samples", samples, "samples for --method mc");
	integrate->add_option("--seed", seed, "seed for --method mc");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return 2;
	}

	try {
		if (*kernel)
			return cmd_kernel(kernel_l, kernel_format);
		if (*verify)
			return cmd_verify(suite, l_range, opt, json_path);
		if (*integrate) {
			if (method == "mc" && samples <= 0) {
				std::cerr << "integrate: --method mc requires --samples > 0\n";
				return 2;
			}
			return cmd_integrate(int_l, method, samples, seed);
		}
	} catch (const std::invalid_argument &e) {
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
