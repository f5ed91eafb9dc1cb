#include "redgw/serialize.hpp"

#include <fmt/format.h>

namespace redgw {

namespace {

Json optional_rational(const std::optional<Rational> &q)
{
	return q ? Json(to_string(*q)) : Json(nullptr);
}

std::optional<Rational> optional_rational(const Json &j)
{
	if (j.is_null())
		return std::nullopt;
	return parse_rational(j.get<std::string>());
}

template <class F>
auto guarded(const char *what, F &&f)
{
	try
	{
		return f();
	}
	catch (const Json::exception &e)
	{
		throw InputError(fmt::format("malformed {} JSON: {}", what, e.what()));
	}
	catch (const TreeError &e)
	{
		throw InputError(fmt::format("invalid {}: {}", what, e.what()));
	}
}

} // namespace

Json to_json(const WeightedTree &t)
{
	Json vertices = Json::array();
	for (const auto &v : t.vertex_list())
		vertices.push_back({{"id", v.id},
		                    {"parent", v.parent ? Json(*v.parent) : Json(nullptr)},
		                    {"weight", v.weight},
		                    {"legs", v.legs}});
	return {{"root", t.root()}, {"vertices", vertices}};
}

WeightedTree tree_from_json(const Json &j)
{
	return guarded("tree", [&] {
		std::vector<Vertex> vs;
		for (const auto &jv : j.at("vertices"))
		{
			Vertex v;
			v.id = jv.at("id").get<std::string>();
			if (jv.contains("parent") && !jv.at("parent").is_null())
				v.parent = jv.at("parent").get<std::string>();
			v.weight = jv.value("weight", 0);
			if (jv.contains("legs"))
				v.legs = jv.at("legs").get<std::set<Leg>>();
			vs.push_back(std::move(v));
		}
		return WeightedTree(j.at("root").get<std::string>(), vs);
	});
}

Json to_json(const Stratum &mu)
{
	Json out = Json::array();
	for (const auto &p : mu.parts())
		out.push_back(Json::array({p.degree, p.legs}));
	return out;
}

Stratum stratum_from_json(const Json &j)
{
	return guarded("stratum", [&] {
		std::vector<StratumPart> parts;
		for (const auto &jp : j)
			parts.push_back({jp.at(0).get<int>(), jp.at(1).get<std::vector<Leg>>()});
		return Stratum(std::move(parts));
	});
}

Json to_json(const ChartAtlas &atlas)
{
	Json equations = Json::array();
	for (const auto &eq : atlas.equations)
	{
		std::string text;
		for (auto i : eq.coordinates)
			text += atlas.coordinates[i] + "*";
		text += atlas.fiber_coordinates[eq.fiber_index];
		equations.push_back({{"coordinates", eq.coordinates}, {"fiber", eq.fiber_index}, {"text", text}});
	}
	Json branches = Json::array();
	for (const auto &b : atlas.branches)
	{
		Json component = std::holds_alternative<ReducedComponent>(b.component)
		                     ? Json("red")
		                     : to_json(std::get<Stratum>(b.component));
		branches.push_back({{"locus", b.locus}, {"component", component}});
	}
	return {{"tree", to_json(atlas.tree)},
	        {"sequence", atlas.sequence},
	        {"n", atlas.n},
	        {"m", atlas.m},
	        {"p_fields", atlas.p_fields},
	        {"coordinates", atlas.coordinates},
	        {"fiber_coordinates", atlas.fiber_coordinates},
	        {"equations", equations},
	        {"branches", branches}};
}

Json to_json(const AuditReport &r)
{
	Json strata = Json::array();
	int surviving = 0;
	for (const auto &s : r.strata)
	{
		surviving += s.verdict == Verdict::survives;
		strata.push_back({{"stratum", to_json(s.stratum)},
		                  {"text", s.stratum.to_string()},
		                  {"k0", s.k0},
		                  {"dim_x", s.dim_x},
		                  {"verdict", to_string(s.verdict)}});
	}
	return {{"n", r.target.n},
	        {"degrees", r.target.degrees},
	        {"dimension", r.target.dimension()},
	        {"d", r.d},
	        {"k", r.k},
	        {"rank_v1", r.rank_v1},
	        {"rank_v2", r.rank_v2},
	        {"dim_component", r.dim_component},
	        {"dim_component_p", r.dim_component_p},
	        {"dim_cone", r.dim_cone},
	        {"dim_b", r.dim_b},
	        {"dim_f_total", r.dim_f_total},
	        {"f_contribution_vanishes", r.f_contribution_vanishes},
	        {"strata", strata},
	        {"surviving", surviving},
	        {"all_vanish", surviving == 0}};
}

Json to_json(const ComparisonReport &r)
{
	const auto &in = r.input;
	return {{"input",
	         {{"n", in.target.n},
	          {"degrees", in.target.degrees},
	          {"d", in.d},
	          {"k", in.k},
	          {"gw0", optional_rational(in.gw0)}}},
	        {"dimension", in.target.dimension()},
	        {"coefficient", to_string(r.coefficient_symbolic)},
	        {"coefficient_symbolic", to_string(r.coefficient_symbolic)},
	        {"coefficient_closed", to_string(r.coefficient_closed)},
	        {"raw_pipeline_value", to_string(r.raw_pipeline_value)},
	        {"sign_factor", r.sign_factor},
	        {"correction", optional_rational(r.correction)},
	        {"match", r.match},
	        {"intermediate",
	         {{"twisted_chern", r.twisted_chern},
	          {"euler", r.euler},
	          {"pushforward", r.pushforward},
	          {"segre_a", r.segre_a}}},
	        {"statement", r.statement}};
}

ComparisonReport report_from_json(const Json &j)
{
	try
	{
		ComparisonReport r;
		const auto &in = j.at("input");
		r.input.target.n = in.at("n").get<int>();
		r.input.target.degrees = in.at("degrees").get<std::vector<int>>();
		r.input.d = in.at("d").get<int>();
		r.input.k = in.at("k").get<int>();
		r.input.gw0 = optional_rational(in.at("gw0"));
		r.coefficient_symbolic = parse_rational(j.at("coefficient_symbolic").get<std::string>());
		r.coefficient_closed = parse_rational(j.at("coefficient_closed").get<std::string>());
		r.raw_pipeline_value = parse_rational(j.at("raw_pipeline_value").get<std::string>());
		r.sign_factor = j.at("sign_factor").get<int>();
		r.correction = optional_rational(j.at("correction"));
		r.match = j.at("match").get<bool>();
		const auto &mid = j.at("intermediate");
		r.twisted_chern = mid.at("twisted_chern").get<std::string>();
		r.euler = mid.at("euler").get<std::string>();
		r.pushforward = mid.at("pushforward").get<std::string>();
		r.segre_a = mid.at("segre_a").get<std::string>();
		r.statement = j.at("statement").get<std::string>();
		return r;
	}
	catch (const Json::exception &e)
	{
		throw InputError(fmt::format("malformed report JSON: {}", e.what()));
	}
}

Json sequences_to_json(const WeightedTree &t, const std::vector<AdvancingSequence> &sequences)
{
	Json seqs = Json::array();
	for (const auto &s : sequences)
	{
		Json strata = Json::array();
		for (const auto &vs : assign_strata(t, s.steps))
			strata.push_back({{"vertex", vs.vertex}, {"stratum", to_json(vs.stratum)}});
		seqs.push_back({{"steps", s.steps}, {"path", to_json(s.path)}, {"strata", strata}});
	}
	return {{"tree", to_json(t)}, {"sequences", seqs}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace redgw
