#pragma once

// Closed-form generator of the universal U(l)-equivariant angular kernel
// beta_eq(X) and the Euler piece chi_eq(X). For each 1 <= k <= l the sets
// I, J run over partitions {k} u I u J = [l], and I', J' over partitions
// I' u J' = [l] with |I'| = |I|:
//
//   beta_eq(X) = sum_{k,I,J} gamma_{(k,I,J)} sum_{I',J'} eps_{(I,I')}
//                  X_{I',I} zb_k dzb_J ^ dz_{J'} / |z|^{2(|J|+1)}
//
//   gamma_{(k,I,J)} = (-1)^{|J|(|J|-1)/2} (i/2pi)^l |J|! eps(k, J)
//
// dzb_J and dz_{J'} are wedged in increasing index order, J-bar block
// first. The retainer minor is taken with rows I' and columns I; the
// opposite orientation produces a form that is neither d_eq-closed nor
// equivariant (the verification suites arbitrate). The X-free stratum is
// minus the classical kernel C_l sum_j conj(Phi_j) ^ Phi / |z|^{2l}.
//
// beta_eq is universal: for an arbitrary equivariant hermitian bundle the
// angular form is obtained by substituting the bundle's equivariant
// curvature data for X through the Chern-Weil map. That transport is
// outside this engine; only the universal U(l) form is generated.

#include "equithom/form.hpp"

#include <vector>

namespace equithom {

// sign with e_k ^ e_J = eps(k, J) e_{ {k} u J }; J sorted ascending, k not in J
int epsilon_kj(int k, const std::vector<int> &j_set);

// (-1)^{sum_s (i_s + i'_s)}; both sets sorted ascending with equal size
int epsilon_ii(const std::vector<int> &i_set, const std::vector<int> &ip_set);

// (-1)^{|J|(|J|-1)/2} (i/2pi)^l |J|! eps(k, J)
Scalar gamma_coefficient(int k, const std::vector<int> &i_set, const std::vector<int> &j_set,
                         int rank);

// retainer minor det[X_{i_s i'_t}] as an exact polynomial
RationalCoefficient minor_x(int rank, const std::vector<int> &i_set,
                            const std::vector<int> &ip_set);

EquivariantForm beta_eq(int rank);

// (i/2pi)^l det[X_ij], a pure X-polynomial of X-degree l
EquivariantForm chi_eq(int rank);

// the classical kernel C_l sum_j conj(Phi_j) ^ Phi / |z|^{2l} with
// C_l = (-1)^{l(l-1)/2} (l-1)! / (2 pi i)^l; integrates to 1 over the
// standard-oriented unit sphere
EquivariantForm classical_bm_kernel(int rank);

} // namespace equithom
