#include "equithom/bm_kernel.hpp"

#include <algorithm>

namespace equithom {

namespace {

std::vector<int> mask_to_set(unsigned mask)
{
	std::vector<int> s;
	for (int i = 0; mask; ++i, mask >>= 1)
		if (mask & 1)
			s.push_back(i + 1);
	return s;
}

// all size-k subsets of [l], ascending
std::vector<std::vector<int>> subsets_of_size(int l, int k)
{
	std::vector<std::vector<int>> out;
	for (unsigned mask = 0; mask < (1u << l); ++mask)
		if (std::popcount(mask) == k)
			out.push_back(mask_to_set(mask));
	std::sort(out.begin(), out.end());
	return out;
}

EquivariantForm wedge_generators(int rank, const std::vector<Generator> &gens)
{
	EquivariantForm f = EquivariantForm::unit(rank);
	for (const auto &g : gens)
		f = wedge(f, EquivariantForm::generator(rank, g));
	return f;
}

} // namespace

int epsilon_kj(int k, const std::vector<int> &j_set)
{
	int below = 0;
	for (int j : j_set) {
		if (j == k)
			throw std::invalid_argument("epsilon_kj: k must not lie in J");
		if (j < k)
			++below;
	}
	return below % 2 == 0 ? 1 : -1;
}

int epsilon_ii(const std::vector<int> &i_set, const std::vector<int> &ip_set)
{
	if (i_set.size() != ip_set.size())
		throw std::invalid_argument("epsilon_ii: size mismatch");
	long long s = 0;
	for (size_t n = 0; n < i_set.size(); ++n)
		s += i_set[n] + ip_set[n];
	return s % 2 == 0 ? 1 : -1;
}

Scalar gamma_coefficient(int k, const std::vector<int> &i_set, const std::vector<int> &j_set,
                         int rank)
{
	(void)i_set; // gamma depends on the partition only through k and J
	int q = int(j_set.size());
	Scalar s = Scalar::i_over_two_pi(unsigned(rank)) * Scalar(factorial(unsigned(q)));
	int sign = epsilon_kj(k, j_set) * ((q * (q - 1) / 2) % 2 == 0 ? 1 : -1);
	return sign < 0 ? -s : s;
}

RationalCoefficient minor_x(int rank, const std::vector<int> &i_set,
                            const std::vector<int> &ip_set)
{
	if (i_set.size() != ip_set.size())
		throw std::invalid_argument("minor_x: size mismatch");
	int n = int(i_set.size());
	if (n == 0)
		return RationalCoefficient(rank, 1); // empty determinant
	std::vector<int> perm(n);
	for (int i = 0; i < n; ++i)
		perm[i] = i;
	Polynomial det;
	do {
		int inversions = 0;
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (perm[i] > perm[j])
					++inversions;
		Polynomial prod(1);
		for (int s = 0; s < n; ++s)
			prod *= Polynomial::variable(x_var(i_set[s], ip_set[perm[s]]));
		if (inversions % 2)
			det -= prod;
		else
			det += prod;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return RationalCoefficient(rank, det);
}

EquivariantForm beta_eq(int rank)
{
	if (rank < 1)
		throw std::invalid_argument("beta_eq: rank must be positive");
	int l = rank;
	EquivariantForm total(l);
	for (int k = 1; k <= l; ++k) {
		// I runs over subsets of [l] \ {k}; J is the complement
		std::vector<int> others;
		for (int i = 1; i <= l; ++i)
			if (i != k)
				others.push_back(i);
		for (unsigned imask = 0; imask < (1u << others.size()); ++imask) {
			std::vector<int> i_set, j_set;
			for (size_t n = 0; n < others.size(); ++n)
				((imask >> n) & 1 ? i_set : j_set).push_back(others[n]);

			Scalar gamma = gamma_coefficient(k, i_set, j_set, l);
			int q = int(j_set.size());

			// dzb_J ^ dz_{J'}, both ascending, J-bar block first
			for (const auto &ip_set : subsets_of_size(l, int(i_set.size()))) {
				std::vector<int> jp_set;
				for (int i = 1; i <= l; ++i)
					if (!std::binary_search(ip_set.begin(), ip_set.end(), i))
						jp_set.push_back(i);
				std::vector<Generator> gens;
				for (int j : j_set)
					gens.push_back({GenKind::dzb, j});
				for (int jp : jp_set)
					gens.push_back({GenKind::dz, jp});
				EquivariantForm w = wedge_generators(l, gens);

				// minor with rows I', columns I: the orientation that
				// makes the kernel d_eq-closed and equivariant (certified
				// against the transgression oracle; the opposite
				// orientation fails both)
				RationalCoefficient coeff =
				    minor_x(l, ip_set, i_set) *
				    RationalCoefficient(l, Polynomial::variable(zb_var(k)));
				coeff = RationalCoefficient(l, coeff.numerator(), q + 1) * gamma;
				if (epsilon_ii(i_set, ip_set) < 0)
					coeff = -coeff;
				total += w * coeff;
			}
		}
	}
	return total;
}

EquivariantForm chi_eq(int rank)
{
	std::vector<int> all(rank);
	for (int i = 0; i < rank; ++i)
		all[i] = i + 1;
	RationalCoefficient det = minor_x(rank, all, all) * Scalar::i_over_two_pi(unsigned(rank));
	return EquivariantForm::scalar(rank, det);
}

EquivariantForm classical_bm_kernel(int rank)
{
	int l = rank;
	// C_l = (-1)^{l(l-1)/2} (l-1)! / (2 pi i)^l ; 1/(2 pi i) = -i/(2 pi)
	Scalar c_l = Scalar::pi_power(-l, GaussRational(Rational(0), Rational(-1, 2)).pow(unsigned(l)) *
	                                      GaussRational(factorial(unsigned(l - 1))));
	if ((l * (l - 1) / 2) % 2)
		c_l = -c_l;

	EquivariantForm total(l);
	for (int j = 1; j <= l; ++j) {
		std::vector<Generator> gens;
		for (int i = 1; i <= l; ++i)
			if (i != j)
				gens.push_back({GenKind::dzb, i});
		for (int i = 1; i <= l; ++i)
			gens.push_back({GenKind::dz, i});
		EquivariantForm w = wedge_generators(l, gens);
		Polynomial num = Polynomial::variable(zb_var(j));
		if (j % 2 == 0) // (-1)^{j-1}
			num = -num;
		total += w * RationalCoefficient(l, num, l);
	}
	return total * c_l;
}

} // namespace equithom
