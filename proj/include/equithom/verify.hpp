#pragma once

// Machine-checked identity suites shared by the CLI `verify` command and
// the acceptance runner. Every symbolic check passes iff its residual is
// exactly zero; numeric checks carry their tolerance in the options.

#include "equithom/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equithom {

inline constexpr const char *kToolVersion = "0.1.0";

struct CheckResult
{
	std::string name;
	int l = 0;
	bool pass = false;
	std::string residual; // deterministic description of the residual
	double wall_ms = 0;
};

struct SuiteOptions
{
	int l_min = 1;
	int l_max = 0; // 0: use the suite default
	uint64_t seed = 20260809;
	long long mc_samples = 1'000'000;
	double mc_sigma = 3.0;
	// additive floor on the Monte Carlo acceptance band: the kernel's top
	// stratum is invariant, so its sampled values are mathematically
	// constant and the statistical sigma degenerates to float rounding
	// noise; without a floor the 3-sigma band would compare rounding
	// errors against each other
	double mc_floor = 1e-12;
	int spot_points = 100;
	double spot_tol = 1e-10;
	int rr_truncation = 0; // 0: default 2l + 2 per rank
};

// suite names: closedness, oracle, bianchi, equivariance, integral, rr, cech
std::vector<std::string> suite_names();
bool is_suite_name(const std::string &name);
int suite_default_l_max(const std::string &name);
int suite_l_ceiling(const std::string &name);

std::vector<CheckResult> run_suite(const std::string &name, const SuiteOptions &opt);

// every [PRIMARY] acceptance criterion, in order; the pair carries the
// printable label and the sub-checks backing it
std::vector<std::pair<std::string, std::vector<CheckResult>>>
acceptance_criteria(const SuiteOptions &opt);

Json report_json(const std::string &suite, const SuiteOptions &opt,
                 const std::vector<CheckResult> &checks, bool include_timings = true);

bool all_pass(const std::vector<CheckResult> &checks);

} // namespace equithom
