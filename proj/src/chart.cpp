#include "redgw/chart.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace redgw {

namespace {

std::string reduced_locus(const std::vector<std::string> &fibers)
{
	return fmt::format("{} = 0", fmt::join(fibers, " = "));
}

} // namespace

std::vector<Rational> ChartAtlas::evaluate(std::span<const Rational> coordinate_values,
                                           std::span<const Rational> fiber_values) const
{
	if (coordinate_values.size() != coordinates.size() || fiber_values.size() != fiber_coordinates.size())
		throw std::invalid_argument("chart point has the wrong number of coordinates");
	std::vector<Rational> out;
	for (const auto &eq : equations)
	{
		Rational v = fiber_values[eq.fiber_index];
		for (auto i : eq.coordinates)
			v *= coordinate_values[i];
		out.push_back(v);
	}
	return out;
}

ChartAtlas build_atlas(const WeightedTree &t, std::span<const VertexId> sequence, int n, int m, bool with_p_fields)
{
	if (n < 1)
		throw std::invalid_argument(fmt::format("ambient dimension n = {} must be at least 1", n));
	if (m < 0)
		throw std::invalid_argument(fmt::format("codimension m = {} must be non-negative", m));
	const auto strata = assign_strata(t, sequence);

	ChartAtlas atlas{t, {sequence.begin(), sequence.end()}, n, m, with_p_fields, {}, {}, {}, {}};
	for (const auto &vs : strata)
		atlas.coordinates.push_back("tau_" + vs.vertex);
	for (int i = 1; i <= n; ++i)
		atlas.fiber_coordinates.push_back(fmt::format("w{}", i));
	if (with_p_fields)
		for (int j = 1; j <= m; ++j)
			atlas.fiber_coordinates.push_back(fmt::format("t{}", j));

	std::vector<std::size_t> all(atlas.coordinates.size());
	for (std::size_t i = 0; i < all.size(); ++i)
		all[i] = i;
	for (std::size_t f = 0; f < atlas.fiber_coordinates.size(); ++f)
		atlas.equations.push_back(ChartEquation{all, f});

	atlas.branches.push_back(ChartBranch{reduced_locus(atlas.fiber_coordinates), ReducedComponent{}});
	for (std::size_t i = 0; i < strata.size(); ++i)
		atlas.branches.push_back(ChartBranch{atlas.coordinates[i] + " = 0", strata[i].stratum});
	return atlas;
}

ChartAtlas restrict_to_zero_section(const ChartAtlas &atlas)
{
	if (!atlas.p_fields)
		return atlas;
	ChartAtlas out = atlas;
	const auto n = static_cast<std::size_t>(atlas.n);
	out.p_fields = false;
	out.fiber_coordinates.resize(n);
	std::erase_if(out.equations, [n](const ChartEquation &eq) { return eq.fiber_index >= n; });
	for (auto &b : out.branches)
		if (std::holds_alternative<ReducedComponent>(b.component))
			b.locus = reduced_locus(out.fiber_coordinates);
	return out;
}

CosectionExpr CosectionExpr::part(CosectionPart which) const
{
	CosectionExpr out{n, degrees, {}};
	for (const auto &t : terms)
		if (t.part == which)
			out.terms.push_back(t);
	return out;
}

std::string CosectionExpr::to_string() const
{
	if (terms.empty())
		return "0";
	std::vector<std::string> parts;
	for (const auto &t : terms)
		parts.push_back(fmt::format("{}", fmt::join(t.factors, "*")));
	return fmt::format("{}", fmt::join(parts, " + "));
}

CosectionExpr cosection_expr(int n, int m, std::span<const int> degrees)
{
	if (static_cast<int>(degrees.size()) != m)
		throw std::invalid_argument(fmt::format("expected {} degrees, got {}", m, degrees.size()));
	if (n < 1)
		throw std::invalid_argument("ambient dimension must be at least 1");
	CosectionExpr expr{n, {degrees.begin(), degrees.end()}, {}};
	for (int j = 1; j <= m; ++j)
		expr.terms.push_back(
		    CosectionTerm{CosectionPart::sigma2, {fmt::format("p'_{}", j), fmt::format("f_{}(u)", j)}});
	for (int j = 1; j <= m; ++j)
		for (int i = 0; i <= n; ++i)
			expr.terms.push_back(CosectionTerm{
			    CosectionPart::sigma1,
			    {fmt::format("p_{}", j), fmt::format("u'_{}", i), fmt::format("(d f_{}/d u_{})(u)", j, i)}});
	return expr;
}

} // namespace redgw
