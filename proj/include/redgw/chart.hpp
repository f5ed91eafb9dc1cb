#pragma once

// Local chart shapes of the desingularized genus-one moduli: smoothing
// coordinates along the final path tree, fiber coordinates w (and t with
// p-fields), the monomial equations tau~ * w_i, and the component label of
// every branch of their zero locus.

#include "redgw/rational.hpp"
#include "redgw/tree.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace redgw {

/// tau~ * fiber[fiber_index], where tau~ is the product of all coordinates.
struct ChartEquation
{
	std::vector<std::size_t> coordinates;
	std::size_t fiber_index = 0;

	bool operator==(const ChartEquation &) const = default;
};

struct ReducedComponent
{
	bool operator==(const ReducedComponent &) const = default;
};

/// One irreducible piece of the zero locus, e.g. "tau_b = 0" -> stratum.
struct ChartBranch
{
	std::string locus;
	std::variant<ReducedComponent, Stratum> component;

	bool operator==(const ChartBranch &) const = default;
};

struct ChartAtlas
{
	WeightedTree tree;
	std::vector<VertexId> sequence;
	int n = 0;
	int m = 0;
	bool p_fields = false;
	std::vector<std::string> coordinates;
	std::vector<std::string> fiber_coordinates;
	std::vector<ChartEquation> equations;
	std::vector<ChartBranch> branches;

	/// F evaluated at a point: one value per equation.
	std::vector<Rational> evaluate(std::span<const Rational> coordinate_values,
	                               std::span<const Rational> fiber_values) const;

	bool operator==(const ChartAtlas &) const = default;
};

ChartAtlas build_atlas(const WeightedTree &t, std::span<const VertexId> sequence, int n, int m, bool with_p_fields);

/// The atlas on the zero section {t_1 = ... = t_m = 0} of a p-field atlas.
ChartAtlas restrict_to_zero_section(const ChartAtlas &atlas);

enum class CosectionPart
{
	sigma1, ///< u'-linear part
	sigma2, ///< p'-linear part
};

struct CosectionTerm
{
	CosectionPart part;
	std::vector<std::string> factors;

	bool operator==(const CosectionTerm &) const = default;
};

/// sum_j p'_j f_j(u) + sum_{i,j} p_j u'_i (d f_j / d u_i)(u), term by term.
struct CosectionExpr
{
	int n = 0;
	std::vector<int> degrees;
	std::vector<CosectionTerm> terms;

	bool is_zero() const { return terms.empty(); }
	CosectionExpr part(CosectionPart which) const;
	std::string to_string() const;
};

CosectionExpr cosection_expr(int n, int m, std::span<const int> degrees);

} // namespace redgw
