#include "equithom/json_io.hpp"

namespace equithom {

Json to_json(const Scalar &s)
{
	Json terms = Json::array();
	for (const auto &[k, c] : s.terms()) {
		Json t;
		t["piExp"] = k;
		t["re"] = rational_str(c.re);
		t["im"] = rational_str(c.im);
		terms.push_back(std::move(t));
	}
	Json j;
	j["type"] = "scalar";
	j["terms"] = std::move(terms);
	return j;
}

Scalar scalar_from_json(const Json &j)
{
	if (j.at("type") != "scalar")
		throw std::invalid_argument("scalar_from_json: wrong type tag");
	Scalar s;
	for (const auto &t : j.at("terms"))
		s.set(t.at("piExp").get<int>(),
		      GaussRational(rational_from_string(t.at("re").get<std::string>()),
		                    rational_from_string(t.at("im").get<std::string>())));
	return s;
}

Json to_json(const RationalCoefficient &c)
{
	Json terms = Json::array();
	for (const auto &[mono, coeff] : c.numerator().terms()) {
		Json vars = Json::array();
		for (const auto &[v, e] : mono)
			vars.push_back(Json::array({var_name(v), e}));
		Json t;
		t["monomial"] = std::move(vars);
		t["coeff"] = to_json(coeff);
		terms.push_back(std::move(t));
	}
	Json j;
	j["type"] = "rationalCoefficient";
	j["rank"] = c.rank();
	j["denomExp"] = c.denom_exp();
	j["numerator"] = std::move(terms);
	return j;
}

RationalCoefficient coefficient_from_json(const Json &j)
{
	if (j.at("type") != "rationalCoefficient")
		throw std::invalid_argument("coefficient_from_json: wrong type tag");
	Polynomial num;
	for (const auto &t : j.at("numerator")) {
		Monomial m;
		for (const auto &ve : t.at("monomial"))
			m.emplace_back(var_from_name(ve.at(0).get<std::string>()), ve.at(1).get<int>());
		num.add_term(m, scalar_from_json(t.at("coeff")));
	}
	return RationalCoefficient(j.at("rank").get<int>(), std::move(num),
	                           j.at("denomExp").get<int>());
}

namespace {

std::string generator_name(Generator g)
{
	switch (g.kind) {
	case GenKind::dz:
		return "dz" + std::to_string(g.index);
	case GenKind::dzb:
		return "dzb" + std::to_string(g.index);
	case GenKind::dt:
		return "dt" + std::to_string(g.index);
	}
	return "?";
}

Generator generator_from_name(const std::string &name)
{
	if (name.rfind("dzb", 0) == 0)
		return {GenKind::dzb, std::stoi(name.substr(3))};
	if (name.rfind("dz", 0) == 0)
		return {GenKind::dz, std::stoi(name.substr(2))};
	if (name.rfind("dt", 0) == 0)
		return {GenKind::dt, std::stoi(name.substr(2))};
	throw std::invalid_argument("generator_from_name: bad name '" + name + "'");
}

} // namespace

Json to_json(const EquivariantForm &f)
{
	Json terms = Json::array();
	for (const auto &[mask, c] : f.terms()) {
		Json gens = Json::array();
		for (const auto &g : f.mask_generators(mask))
			gens.push_back(generator_name(g));
		Json t;
		t["generators"] = std::move(gens);
		t["coeff"] = to_json(c);
		terms.push_back(std::move(t));
	}
	Json j;
	j["type"] = "equivariantForm";
	j["rank"] = f.rank();
	j["simplexDim"] = f.simplex_dim();
	j["terms"] = std::move(terms);
	return j;
}

EquivariantForm form_from_json(const Json &j)
{
	if (j.at("type") != "equivariantForm")
		throw std::invalid_argument("form_from_json: wrong type tag");
	EquivariantForm f(j.at("rank").get<int>(), j.at("simplexDim").get<int>());
	for (const auto &t : j.at("terms")) {
		GenMask mask = 0;
		for (const auto &gname : t.at("generators"))
			mask |= GenMask(1) << f.gen_bit(generator_from_name(gname.get<std::string>()));
		f.add_term(mask, coefficient_from_json(t.at("coeff")));
	}
	return f;
}

Json to_json(const CechTriple &t)
{
	Json j;
	j["type"] = "cechTriple";
	j["degree"] = t.degree;
	j["representation"] = t.representation == TripleRepresentation::proof ? "proof" : "theorem";
	j["xi0"] = to_json(t.xi0);
	j["xi1"] = to_json(t.xi1);
	j["xi01"] = to_json(t.xi01);
	return j;
}

CechTriple triple_from_json(const Json &j)
{
	if (j.at("type") != "cechTriple")
		throw std::invalid_argument("triple_from_json: wrong type tag");
	auto rep = j.at("representation").get<std::string>() == "theorem"
	               ? TripleRepresentation::theorem
	               : TripleRepresentation::proof;
	return CechTriple(form_from_json(j.at("xi0")), form_from_json(j.at("xi1")),
	                  form_from_json(j.at("xi01")), j.at("degree").get<int>(), rep);
}

Json to_json(const TruncatedSeries &s)
{
	Json terms = Json::array();
	for (const auto &[e, c] : s.terms()) {
		Json t;
		t["exponents"] = e;
		t["coeff"] = rational_str(c);
		terms.push_back(std::move(t));
	}
	Json j;
	j["type"] = "truncatedSeries";
	j["nvars"] = s.nvars();
	j["truncation"] = s.truncation();
	j["terms"] = std::move(terms);
	return j;
}

Json to_json(const ChernBasisPolynomial &p)
{
	Json terms = Json::array();
	for (const auto &[b, c] : p) {
		Json t;
		t["exponents"] = b;
		t["coeff"] = rational_str(c);
		terms.push_back(std::move(t));
	}
	Json j;
	j["type"] = "chernBasisPolynomial";
	j["terms"] = std::move(terms);
	return j;
}

Json to_json(const FormMatrix &m)
{
	Json rows = Json::array();
	for (const auto &row : m) {
		Json r = Json::array();
		for (const auto &f : row)
			r.push_back(to_json(f));
		rows.push_back(std::move(r));
	}
	Json j;
	j["type"] = "formMatrix";
	j["entries"] = std::move(rows);
	return j;
}

Json to_json(const Connection &c)
{
	Json ell = Json::array();
	for (const auto &row : c.ell) {
		Json r = Json::array();
		for (const auto &e : row)
			r.push_back(to_json(e));
		ell.push_back(std::move(r));
	}
	Json j;
	j["type"] = "connection";
	j["rank"] = c.rank;
	j["theta"] = to_json(c.theta);
	j["ell"] = std::move(ell);
	return j;
}

} // namespace equithom
