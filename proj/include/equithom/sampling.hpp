#pragma once

// Deterministic randomized inputs for the property suites. Connections are
// drawn from the affine family of U(l)-invariant connections in the
// standard frame (the Bianchi identity and the transgression cocycle
// relation hold exactly for those, and only those). Random forms are built
// from a pool of equivariant building blocks, so d_eq^2 = 0 holds exactly.

#include "equithom/cech.hpp"
#include "equithom/connection.hpp"

#include <cstdint>

namespace equithom {

class Rng
{
  public:
	explicit Rng(uint64_t seed) : state_(seed) {}

	uint64_t next();
	// uniform in [lo, hi]
	int uniform_int(int lo, int hi);
	// small nonzero rational with numerator in [-bound, bound]
	Rational small_rational(int bound = 3);
	GaussRational small_gauss(int bound = 3);

  private:
	uint64_t state_;
};

// random invariant connection with ell(X) = X: a combination of
//   sigma^a zb_j dz_i,  sigma^a z_i dzb_j,
//   delta_ij sigma^a sum_k zb_k dz_k,  delta_ij sigma^a sum_k z_k dzb_k
// with small Gaussian-rational weights; polynomial entries when
// allow_denominators is false, otherwise sigma^{-1} variants may appear
Connection random_invariant_connection(int rank, Rng &rng, bool allow_denominators = false);

// random connection with no invariance constraint (used to exhibit the
// Bianchi defect = -(L_X theta + [ell, theta]) identity)
Connection random_arbitrary_connection(int rank, Rng &rng);

// random equivariant form, homogeneous of the given total degree;
// allow_denominators controls sigma^{-1} factors (forms on W_0 vs W_1)
EquivariantForm random_equivariant_form(int rank, int total_degree, Rng &rng,
                                        bool allow_denominators);

// random triple with homogeneous degrees (r, r, r-1) and xi1 regular
CechTriple random_cech_triple(int rank, int degree, Rng &rng);

// the building-block pool, exposed so its invariance can be asserted
std::vector<EquivariantForm> equivariant_pool(int rank);

} // namespace equithom
