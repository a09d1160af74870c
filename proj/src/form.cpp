#include "equithom/form.hpp"

#include <bit>
#include <sstream>

namespace equithom {

int koszul_sign(GenMask a, GenMask b)
{
	if (a & b)
		return 0;
	int inversions = 0;
	for (GenMask rest = b; rest;) {
		int j = std::countr_zero(rest);
		rest &= rest - 1;
		inversions += std::popcount(a >> (j + 1));
	}
	return (inversions % 2 == 0) ? 1 : -1;
}

EquivariantForm EquivariantForm::scalar(int rank, RationalCoefficient c, int simplex_dim)
{
	EquivariantForm f(rank, simplex_dim);
	f.add_term(0, c);
	return f;
}

EquivariantForm EquivariantForm::generator(int rank, Generator g, int simplex_dim)
{
	EquivariantForm f(rank, simplex_dim);
	f.add_term(GenMask(1) << f.gen_bit(g), RationalCoefficient(rank, 1));
	return f;
}

int EquivariantForm::gen_bit(Generator g) const
{
	switch (g.kind) {
	case GenKind::dz:
		if (g.index < 1 || g.index > rank_)
			throw std::invalid_argument("generator index out of range");
		return g.index - 1;
	case GenKind::dzb:
		if (g.index < 1 || g.index > rank_)
			throw std::invalid_argument("generator index out of range");
		return rank_ + g.index - 1;
	case GenKind::dt:
		if (g.index < 1 || g.index > simplex_dim_)
			throw std::invalid_argument("dt index out of range");
		return 2 * rank_ + g.index - 1;
	}
	throw std::logic_error("gen_bit");
}

std::vector<Generator> EquivariantForm::mask_generators(GenMask mask) const
{
	std::vector<Generator> gens;
	for (GenMask rest = mask; rest;) {
		int j = std::countr_zero(rest);
		rest &= rest - 1;
		if (j < rank_)
			gens.push_back({GenKind::dz, j + 1});
		else if (j < 2 * rank_)
			gens.push_back({GenKind::dzb, j - rank_ + 1});
		else
			gens.push_back({GenKind::dt, j - 2 * rank_ + 1});
	}
	return gens;
}

bool EquivariantForm::mask_has_dt(GenMask mask) const
{
	return (mask >> (2 * rank_)) != 0;
}

bool EquivariantForm::has_dt() const
{
	for (const auto &[m, c] : terms_)
		if (mask_has_dt(m))
			return true;
	return false;
}

void EquivariantForm::add_term(GenMask mask, const RationalCoefficient &c)
{
	if (c.is_zero())
		return;
	if (c.rank() != rank_)
		throw std::invalid_argument("EquivariantForm::add_term: coefficient rank mismatch");
	auto it = terms_.find(mask);
	if (it == terms_.end()) {
		terms_.emplace(mask, c);
	} else {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

const RationalCoefficient &EquivariantForm::coefficient(GenMask mask) const
{
	static const RationalCoefficient zero_rc;
	auto it = terms_.find(mask);
	if (it == terms_.end())
		return zero_rc;
	return it->second;
}

EquivariantForm &EquivariantForm::operator+=(const EquivariantForm &o)
{
	if (rank_ != o.rank_)
		throw std::invalid_argument("EquivariantForm: rank mismatch");
	simplex_dim_ = std::max(simplex_dim_, o.simplex_dim_);
	for (const auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

EquivariantForm &EquivariantForm::operator-=(const EquivariantForm &o)
{
	return *this += -o;
}

EquivariantForm EquivariantForm::operator-() const
{
	EquivariantForm r(rank_, simplex_dim_);
	for (const auto &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

EquivariantForm EquivariantForm::operator*(const RationalCoefficient &c) const
{
	EquivariantForm r(rank_, simplex_dim_);
	for (const auto &[m, c0] : terms_)
		r.add_term(m, c0 * c);
	return r;
}

EquivariantForm EquivariantForm::operator*(const Scalar &c) const
{
	return *this * RationalCoefficient(rank_, c);
}

EquivariantForm EquivariantForm::with_simplex_dim(int p) const
{
	if (p < simplex_dim_)
		throw std::invalid_argument("with_simplex_dim: cannot shrink");
	EquivariantForm r = *this;
	r.simplex_dim_ = p;
	return r;
}

int EquivariantForm::max_form_degree() const
{
	int d = 0;
	for (const auto &[m, c] : terms_)
		d = std::max(d, std::popcount(m));
	return d;
}

bool EquivariantForm::is_form_homogeneous(int degree) const
{
	for (const auto &[m, c] : terms_)
		if (std::popcount(m) != degree)
			return false;
	return true;
}

std::map<int, EquivariantForm> EquivariantForm::x_strata() const
{
	std::map<int, EquivariantForm> r;
	for (const auto &[m, c] : terms_)
		for (auto &[xdeg, poly] : c.numerator().strata_by_kind(VarKind::X)) {
			auto &f = r.try_emplace(xdeg, rank_, simplex_dim_).first->second;
			f.add_term(m, RationalCoefficient(rank_, poly, c.denom_exp()));
		}
	return r;
}

EquivariantForm EquivariantForm::top_form_degree_piece() const
{
	return form_degree_piece(max_form_degree());
}

EquivariantForm EquivariantForm::form_degree_piece(int degree) const
{
	EquivariantForm r(rank_, simplex_dim_);
	for (const auto &[m, c] : terms_)
		if (std::popcount(m) == degree)
			r.terms_.emplace(m, c);
	return r;
}

EquivariantForm EquivariantForm::substitute_t(int nu, const Scalar &value) const
{
	EquivariantForm r(rank_, simplex_dim_);
	for (const auto &[m, c] : terms_)
		r.add_term(m, RationalCoefficient(rank_, c.numerator().substitute(t_var(nu), value),
		                                  c.denom_exp()));
	return r;
}

EquivariantForm EquivariantForm::set_x_zero() const
{
	EquivariantForm r(rank_, simplex_dim_);
	for (const auto &[m, c] : terms_)
		r.add_term(m, RationalCoefficient(rank_, c.numerator().drop_kind(VarKind::X),
		                                  c.denom_exp()));
	return r;
}

std::string EquivariantForm::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[m, c] : terms_) {
		if (!first)
			os << "  +  ";
		first = false;
		os << c.str();
		for (const auto &g : mask_generators(m)) {
			os << " ";
			switch (g.kind) {
			case GenKind::dz:
				os << "dz" << g.index;
				break;
			case GenKind::dzb:
				os << "dzb" << g.index;
				break;
			case GenKind::dt:
				os << "dt" << g.index;
				break;
			}
		}
	}
	return os.str();
}

EquivariantForm wedge(const EquivariantForm &a, const EquivariantForm &b)
{
	if (a.rank() != b.rank())
		throw std::invalid_argument("wedge: rank mismatch");
	EquivariantForm r(a.rank(), std::max(a.simplex_dim(), b.simplex_dim()));
	for (const auto &[ma, ca] : a.terms())
		for (const auto &[mb, cb] : b.terms()) {
			int sign = koszul_sign(ma, mb);
			if (sign == 0)
				continue;
			auto prod = ca * cb;
			if (sign < 0)
				prod = -prod;
			r.add_term(ma | mb, prod);
		}
	return r;
}

namespace {

void require_no_dt(const EquivariantForm &a, const char *op)
{
	if (a.has_dt())
		throw std::invalid_argument(std::string(op) + ": dt generator present");
}

// d of a single coefficient P / sigma^m as a one-form:
//   (dP)/sigma^m - m * (P/sigma^{m+1}) * d(sigma)
EquivariantForm coefficient_differential(int rank, const RationalCoefficient &c)
{
	EquivariantForm r(rank);
	for (int i = 1; i <= rank; ++i) {
		// dz_i component
		Polynomial dz_part = c.numerator().derivative(z_var(i));
		Polynomial dzb_part = c.numerator().derivative(zb_var(i));
		if (c.denom_exp() > 0) {
			// subtract m * P * d(sigma)-components / sigma: d sigma =
			// sum_i zb_i dz_i + z_i dzb_i; done over the common
			// denominator sigma^{m+1}
			dz_part *= sigma_polynomial(rank);
			dzb_part *= sigma_polynomial(rank);
			Scalar m_scalar(c.denom_exp());
			dz_part -= c.numerator() * Polynomial::variable(zb_var(i)) * m_scalar;
			dzb_part -= c.numerator() * Polynomial::variable(z_var(i)) * m_scalar;
			int denom = c.denom_exp() + 1;
			r += EquivariantForm::generator(rank, {GenKind::dz, i}) *
			     RationalCoefficient(rank, dz_part, denom);
			r += EquivariantForm::generator(rank, {GenKind::dzb, i}) *
			     RationalCoefficient(rank, dzb_part, denom);
		} else {
			r += EquivariantForm::generator(rank, {GenKind::dz, i}) *
			     RationalCoefficient(rank, dz_part);
			r += EquivariantForm::generator(rank, {GenKind::dzb, i}) *
			     RationalCoefficient(rank, dzb_part);
		}
	}
	return r;
}

// i_X dz_i = -sum_k X_ik z_k,  i_X dzb_i = +sum_k X_ki zb_k
RationalCoefficient contract_generator_x(int rank, Generator g)
{
	Polynomial p;
	if (g.kind == GenKind::dz) {
		for (int k = 1; k <= rank; ++k)
			p -= Polynomial::variable(x_var(g.index, k)) * Polynomial::variable(z_var(k));
	} else if (g.kind == GenKind::dzb) {
		for (int k = 1; k <= rank; ++k)
			p += Polynomial::variable(x_var(k, g.index)) * Polynomial::variable(zb_var(k));
	} else {
		throw std::invalid_argument("contract_x: dt generator present");
	}
	return RationalCoefficient(rank, p);
}

RationalCoefficient contract_generator_basis(int rank, Generator g, int ea, int eb)
{
	Polynomial p;
	if (g.kind == GenKind::dz) {
		if (g.index == ea)
			p -= Polynomial::variable(z_var(eb));
	} else if (g.kind == GenKind::dzb) {
		if (g.index == eb)
			p += Polynomial::variable(zb_var(ea));
	} else {
		throw std::invalid_argument("contract_basis: dt generator present");
	}
	return RationalCoefficient(rank, p);
}

// generic degree -1 derivation determined by its values on generators
EquivariantForm contract_with(const EquivariantForm &a,
                              const std::function<RationalCoefficient(Generator)> &gen_image)
{
	EquivariantForm r(a.rank(), a.simplex_dim());
	for (const auto &[mask, c] : a.terms()) {
		int position_sign = 1;
		for (const auto &g : a.mask_generators(mask)) {
			GenMask bit = GenMask(1) << a.gen_bit(g);
			auto img = gen_image(g);
			if (!img.is_zero()) {
				auto coeff = c * img;
				if (position_sign < 0)
					coeff = -coeff;
				r.add_term(mask & ~bit, coeff);
			}
			position_sign = -position_sign;
		}
	}
	return r;
}

} // namespace

EquivariantForm exterior_derivative(const EquivariantForm &a)
{
	require_no_dt(a, "exterior_derivative");
	EquivariantForm r(a.rank(), a.simplex_dim());
	for (const auto &[mask, c] : a.terms()) {
		EquivariantForm dc = coefficient_differential(a.rank(), c);
		for (const auto &[gmask, gc] : dc.terms()) {
			int sign = koszul_sign(gmask, mask);
			if (sign == 0)
				continue;
			r.add_term(gmask | mask, sign < 0 ? -gc : gc);
		}
	}
	return r;
}

EquivariantForm contract_x(const EquivariantForm &a)
{
	require_no_dt(a, "contract_x");
	return contract_with(
	    a, [&](Generator g) { return contract_generator_x(a.rank(), g); });
}

EquivariantForm d_eq(const EquivariantForm &a)
{
	return exterior_derivative(a) - contract_x(a);
}

EquivariantForm contract_basis(const EquivariantForm &a, int ea, int eb)
{
	require_no_dt(a, "contract_basis");
	return contract_with(
	    a, [&](Generator g) { return contract_generator_basis(a.rank(), g, ea, eb); });
}

EquivariantForm total_lie_derivative(const EquivariantForm &a, int ea, int eb)
{
	require_no_dt(a, "total_lie_derivative");
	// Cartan formula for the fundamental field of E_ab
	EquivariantForm lie = exterior_derivative(contract_basis(a, ea, eb)) +
	                      contract_basis(exterior_derivative(a), ea, eb);
	// derivation induced by X -> -[E_ab, X]:
	// X_uv -> -delta_{ua} X_{bv} + delta_{bv} X_{ua}
	auto image = [&](Var v) -> std::optional<Polynomial> {
		if (!is_x_var(v))
			return std::nullopt;
		int u = int(var_a(v)), w = int(var_b(v));
		Polynomial p;
		if (u == ea)
			p -= Polynomial::variable(x_var(eb, w));
		if (w == eb)
			p += Polynomial::variable(x_var(u, ea));
		return p;
	};
	EquivariantForm xpart(a.rank(), a.simplex_dim());
	for (const auto &[mask, c] : a.terms())
		xpart.add_term(mask, RationalCoefficient(a.rank(), c.numerator().derivation(image),
		                                         c.denom_exp()));
	return lie + xpart;
}

std::complex<double> eval_on_frame(const EquivariantForm &a,
                                   const std::vector<std::complex<double>> &z,
                                   std::span<const std::vector<std::complex<double>>> frame,
                                   const std::function<std::complex<double>(Var)> &x_point,
                                   double pi_value)
{
	size_t k = frame.size();
	std::complex<double> total = 0;
	for (const auto &[mask, c] : a.terms()) {
		auto gens = a.mask_generators(mask);
		if (gens.size() != k)
			throw std::invalid_argument("eval_on_frame: form degree != number of vectors");
		// det[ gen_r(v_s) ] via Gaussian elimination
		std::vector<std::vector<std::complex<double>>> mat(k, std::vector<std::complex<double>>(k));
		for (size_t r = 0; r < k; ++r)
			for (size_t s = 0; s < k; ++s) {
				const auto &g = gens[r];
				const auto &v = frame[s];
				if (g.kind == GenKind::dz)
					mat[r][s] = v.at(g.index - 1);
				else if (g.kind == GenKind::dzb)
					mat[r][s] = std::conj(v.at(g.index - 1));
				else
					throw std::invalid_argument("eval_on_frame: dt generator present");
			}
		std::complex<double> det = 1;
		for (size_t col = 0; col < k; ++col) {
			size_t piv = col;
			for (size_t r = col + 1; r < k; ++r)
				if (std::abs(mat[r][col]) > std::abs(mat[piv][col]))
					piv = r;
			if (std::abs(mat[piv][col]) == 0.0) {
				det = 0;
				break;
			}
			if (piv != col) {
				std::swap(mat[piv], mat[col]);
				det = -det;
			}
			det *= mat[col][col];
			for (size_t r = col + 1; r < k; ++r) {
				auto f = mat[r][col] / mat[col][col];
				for (size_t s = col; s < k; ++s)
					mat[r][s] -= f * mat[col][s];
			}
		}
		if (det != std::complex<double>(0))
			total += c.eval(z, x_point, pi_value) * det;
	}
	return total;
}

} // namespace equithom
