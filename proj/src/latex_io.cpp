#include "equithom/latex_io.hpp"

#include <sstream>

namespace equithom {

namespace {

std::string latex_rational(const Rational &r, bool spell_unit = true)
{
	BigInt num = numerator(r), den = denominator(r);
	std::ostringstream os;
	if (den == 1) {
		if (!spell_unit && (num == 1 || num == -1))
			return num == 1 ? "" : "-";
		os << num.str();
	} else {
		if (num < 0)
			os << "-";
		os << "\\frac{" << BigInt(abs(num)).str() << "}{" << den.str() << "}";
	}
	return os.str();
}

// one Gaussian-rational-times-pi-power factor
std::string latex_pi_term(int k, const GaussRational &c)
{
	std::ostringstream os;
	bool pure_imag = c.re == 0 && c.im != 0;
	Rational mag = pure_imag ? c.im : c.re;
	if (pure_imag && c.im.sign() < 0) {
		os << "-";
		mag = -mag;
	}
	std::string pi_pow;
	if (k != 0) {
		pi_pow = "\\pi";
		if (k != 1)
			pi_pow += "^{" + std::to_string(k) + "}";
	}
	if (!pure_imag && c.im != 0) {
		// general complex coefficient
		os << "\\left(" << latex_rational(c.re);
		if (c.im.sign() > 0)
			os << "+";
		os << latex_rational(c.im) << "\\sqrt{-1}\\right)";
		if (k > 0)
			os << pi_pow;
		else if (k < 0)
			os << "\\pi^{" + std::to_string(k) + "}";
		return os.str();
	}
	// rational or purely imaginary: render negative pi powers as fractions
	BigInt num = numerator(mag), den = denominator(mag);
	std::string numerator_str;
	if (num < 0) {
		os << "-";
		num = -num;
	}
	if (num != 1 || (!pure_imag && den == 1 && k <= 0))
		numerator_str = num.str();
	if (pure_imag)
		numerator_str += "\\sqrt{-1}";
	if (k > 0)
		numerator_str += (numerator_str.empty() ? "" : " ") + pi_pow;
	std::string denominator_str;
	if (den != 1)
		denominator_str = den.str();
	if (k < 0) {
		std::string p = "\\pi";
		if (k != -1)
			p += "^{" + std::to_string(-k) + "}";
		denominator_str += (denominator_str.empty() ? "" : " ") + p;
	}
	if (denominator_str.empty())
		os << (numerator_str.empty() ? "1" : numerator_str);
	else
		os << "\\frac{" << (numerator_str.empty() ? "1" : numerator_str) << "}{"
		   << denominator_str << "}";
	return os.str();
}

std::string latex_var(Var v, bool subscripts)
{
	switch (var_kind(v)) {
	case VarKind::z:
		return subscripts ? "z_{" + std::to_string(var_a(v)) + "}" : "z";
	case VarKind::zb:
		return subscripts ? "\\bar{z}_{" + std::to_string(var_a(v)) + "}" : "\\bar{z}";
	case VarKind::X:
		return "X_{" + std::to_string(var_a(v)) + std::to_string(var_b(v)) + "}";
	case VarKind::t:
		return subscripts ? "t_{" + std::to_string(var_a(v)) + "}" : "t";
	}
	return "?";
}

std::string latex_monomial(const Monomial &m, bool subscripts)
{
	std::ostringstream os;
	for (const auto &[v, e] : m) {
		os << latex_var(v, subscripts);
		if (e > 1)
			os << "^{" << e << "}";
	}
	return os.str();
}

std::string latex_generator(Generator g, bool subscripts)
{
	std::string idx = subscripts ? "_{" + std::to_string(g.index) + "}" : "";
	switch (g.kind) {
	case GenKind::dz:
		return "dz" + idx;
	case GenKind::dzb:
		return "d\\bar{z}" + idx;
	case GenKind::dt:
		return "dt" + idx;
	}
	return "?";
}

} // namespace

std::string latex(const Scalar &s)
{
	if (s.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[k, c] : s.terms()) {
		std::string t = latex_pi_term(k, c);
		if (!first && t.size() && t[0] != '-')
			os << "+";
		os << t;
		first = false;
	}
	return os.str();
}

namespace {

// rank-one pretty printing: cancel z zb monomial factors against sigma^m
// and carry the generator into the fraction
std::string latex_term_rank1(const Monomial &mono, const Scalar &coeff, int denom_exp,
                             const std::vector<Generator> &gens)
{
	int ze = 0, zbe = 0;
	Monomial xt_part;
	for (const auto &[v, e] : mono) {
		if (var_kind(v) == VarKind::z)
			ze += e;
		else if (var_kind(v) == VarKind::zb)
			zbe += e;
		else
			xt_part.emplace_back(v, e);
	}
	ze -= denom_exp;
	zbe -= denom_exp;

	std::ostringstream os;
	os << latex(coeff);
	if (!xt_part.empty())
		os << " " << latex_monomial(xt_part, false);
	std::string num, den;
	auto put = [](std::string &dst, const std::string &piece) {
		dst += (dst.empty() ? "" : " ") + piece;
	};
	if (ze > 0)
		put(num, ze == 1 ? "z" : "z^{" + std::to_string(ze) + "}");
	if (ze < 0)
		put(den, ze == -1 ? "z" : "z^{" + std::to_string(-ze) + "}");
	if (zbe > 0)
		put(num, zbe == 1 ? "\\bar{z}" : "\\bar{z}^{" + std::to_string(zbe) + "}");
	if (zbe < 0)
		put(den, zbe == -1 ? "\\bar{z}" : "\\bar{z}^{" + std::to_string(-zbe) + "}");
	std::string gen_str;
	for (size_t i = 0; i < gens.size(); ++i)
		put(gen_str, (i ? "\\wedge " : "") + latex_generator(gens[i], false));
	if (den.empty()) {
		if (!num.empty())
			os << " " << num;
		if (!gen_str.empty())
			os << " " << gen_str;
	} else {
		put(num, gen_str);
		os << "\\frac{" << (num.empty() ? "1" : num) << "}{" << den << "}";
	}
	return os.str();
}

} // namespace

std::string latex(const RationalCoefficient &c)
{
	if (c.is_zero())
		return "0";
	std::ostringstream os;
	bool subscripts = c.rank() != 1;
	bool first = true;
	for (const auto &[mono, coeff] : c.numerator().terms()) {
		std::string piece;
		{
			std::ostringstream ps;
			std::string cs = latex(coeff);
			bool wrap = coeff.terms().size() > 1;
			ps << (wrap ? "\\left(" + cs + "\\right)" : cs);
			if (!mono.empty())
				ps << " " << latex_monomial(mono, subscripts);
			piece = ps.str();
		}
		if (!first && !piece.empty() && piece[0] != '-')
			os << "+";
		os << piece;
		first = false;
	}
	std::string body = os.str();
	if (c.denom_exp() == 0)
		return body;
	return "\\frac{" + body + "}{\\|z\\|^{" + std::to_string(2 * c.denom_exp()) + "}}";
}

std::string latex(const EquivariantForm &f)
{
	if (f.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[mask, c] : f.terms()) {
		auto gens = f.mask_generators(mask);
		std::string piece;
		if (f.rank() == 1) {
			// every coefficient monomial prints as its own
			// fully-cancelled fraction
			std::ostringstream ps;
			bool pfirst = true;
			for (const auto &[mono, coeff] : c.numerator().terms()) {
				std::string t = latex_term_rank1(mono, coeff, c.denom_exp(), gens);
				if (!pfirst && !t.empty() && t[0] != '-')
					ps << "+";
				ps << t;
				pfirst = false;
			}
			piece = ps.str();
		} else {
			std::ostringstream ps;
			bool wrap = c.numerator().terms().size() > 1;
			ps << (wrap ? "\\left(" + latex(c) + "\\right)" : latex(c));
			for (size_t i = 0; i < gens.size(); ++i)
				ps << (i ? "\\wedge " : "\\, ") << latex_generator(gens[i], true);
			piece = ps.str();
		}
		if (!first && !piece.empty() && piece[0] != '-')
			os << "+";
		os << piece;
		first = false;
	}
	return os.str();
}

std::string latex(const TruncatedSeries &s)
{
	if (s.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[e, c] : s.terms()) {
		std::string cs = latex_rational(c);
		if (!first && !cs.empty() && cs[0] != '-')
			os << "+";
		os << cs;
		for (size_t i = 0; i < e.size(); ++i)
			if (e[i] > 0) {
				os << " a_{" << (i + 1) << "}";
				if (e[i] > 1)
					os << "^{" << e[i] << "}";
			}
		first = false;
	}
	return os.str();
}

std::string latex(const ChernBasisPolynomial &p)
{
	if (p.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[b, c] : p) {
		std::string cs = latex_rational(c);
		if (!first && !cs.empty() && cs[0] != '-')
			os << "+";
		os << cs;
		for (size_t i = 0; i < b.size(); ++i)
			if (b[i] > 0) {
				os << " c_{" << (i + 1) << "}";
				if (b[i] > 1)
					os << "^{" << b[i] << "}";
			}
		first = false;
	}
	return os.str();
}

std::string latex(const FormMatrix &m)
{
	std::ostringstream os;
	os << "\\begin{pmatrix}";
	for (size_t i = 0; i < m.size(); ++i) {
		for (size_t j = 0; j < m[i].size(); ++j) {
			os << latex(m[i][j]);
			if (j + 1 < m[i].size())
				os << " & ";
		}
		if (i + 1 < m.size())
			os << " \\\\ ";
	}
	os << "\\end{pmatrix}";
	return os.str();
}

std::string sexpr(const Scalar &s)
{
	std::ostringstream os;
	os << "(scalar";
	for (const auto &[k, c] : s.terms())
		os << " (pi " << k << " " << rational_str(c.re) << " " << rational_str(c.im) << ")";
	os << ")";
	return os.str();
}

std::string sexpr(const RationalCoefficient &c)
{
	std::ostringstream os;
	os << "(coeff (denom-exp " << c.denom_exp() << ") (num";
	for (const auto &[mono, coeff] : c.numerator().terms()) {
		os << " (term " << sexpr(coeff) << " (mono";
		for (const auto &[v, e] : mono)
			os << " (" << var_name(v) << " " << e << ")";
		os << "))";
	}
	os << "))";
	return os.str();
}

std::string sexpr(const EquivariantForm &f)
{
	std::ostringstream os;
	os << "(form (rank " << f.rank() << ") (simplex-dim " << f.simplex_dim() << ")";
	for (const auto &[mask, c] : f.terms()) {
		os << " (term (gens";
		for (const auto &g : f.mask_generators(mask)) {
			switch (g.kind) {
			case GenKind::dz:
				os << " dz" << g.index;
				break;
			case GenKind::dzb:
				os << " dzb" << g.index;
				break;
			case GenKind::dt:
				os << " dt" << g.index;
				break;
			}
		}
		os << ") " << sexpr(c) << ")";
	}
	os << ")";
	return os.str();
}

} // namespace equithom
