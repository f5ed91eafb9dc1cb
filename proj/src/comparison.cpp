#include "redgw/comparison.hpp"

#include "redgw/audit.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace redgw {

void ComparisonInput::validate() const
{
	target.validate();
	if (d < 1)
		throw InputError(fmt::format("d = {} must be at least 1", d));
	if (k < 0)
		throw InputError(fmt::format("k = {} must be non-negative", k));
}

namespace {

Ring base_ring()
{
	// A*(M_{1,1} x P^1): alpha^2 = beta^2 = 0, [pt] = alpha * beta of degree 1.
	return make_ring({{"alpha", 1, 2}, {"beta", 1, 2}}, 2, Exponents{1, 1}, 1);
}

ComparisonModel make_model(const ComparisonInput &input)
{
	const Ring base = base_ring();
	const auto alpha = GradedClass::generator(base, "alpha");
	const auto beta = GradedClass::generator(base, "beta");
	const int n = input.target.n;
	const int d = input.d;

	auto hodge = BundleExpr::line(Rational(1, 24) * alpha);
	auto normal = BundleExpr(n - 1, beta * Rational((n + 1) * d - 2) + Rational(1));
	std::vector<BundleExpr> lines;
	for (int w : input.target.degrees)
		lines.push_back(BundleExpr::line(Rational(1, 24) * alpha - Rational(w * d) * beta));
	auto a_r = lines.empty() ? BundleExpr::trivial(base, 0) : whitney_sum(lines);
	ProjectiveCompletion projective(a_r);
	return ComparisonModel{base, std::move(hodge), std::move(normal), std::move(lines), std::move(a_r),
	                       std::move(projective)};
}

} // namespace

ComparisonModel build_pr_ring(const ComparisonInput &input)
{
	input.validate();
	return make_model(input);
}

CoefficientTrace coefficient_trace(const ComparisonInput &input)
{
	const auto model = build_pr_ring(input);
	const auto &proj = model.projective;
	const BundleExpr twisted = proj.pullback(twist_by_line(model.normal, dual(model.hodge)));
	const BundleExpr minus_d = BundleExpr::line(-proj.divisor());
	const GradedClass euler = euler_top(twist_by_line(twisted, minus_d));
	GradedClass pushed = proj.pushforward(euler);
	Rational raw = degree(pushed);
	return CoefficientTrace{twisted.total_chern(), euler, total_segre(model.a_r), std::move(pushed), std::move(raw)};
}

namespace {

bool full_stratum_survives(const ComparisonInput &input)
{
	std::vector<Leg> legs;
	for (int l = 1; l <= input.k; ++l)
		legs.push_back(l);
	const Stratum full({StratumPart{input.d, legs}});
	const auto audit = vanishing_verdicts(input.target, input.d, input.k, std::span(&full, 1));
	return audit.strata.front().verdict == Verdict::survives;
}

Rational discharge_sign(const ComparisonInput &input, const Rational &raw)
{
	return sign_power(input.target.n + 1) * raw;
}

} // namespace

Rational coefficient_symbolic(const ComparisonInput &input)
{
	input.validate();
	if (!full_stratum_survives(input))
		return 0;
	return discharge_sign(input, coefficient_trace(input).raw);
}

Rational coefficient_closed(const ComparisonInput &input)
{
	input.validate();
	if (input.target.dimension() == 2)
		return 0;
	return Rational(2 - input.target.first_chern_on_line() * input.d, 24);
}

int sign_factor(const ComparisonInput &input, int genus)
{
	if (genus != 0 && genus != 1)
		throw InputError(fmt::format("genus {} is not 0 or 1", genus));
	const long long m = input.target.codimension();
	const long long exponent = static_cast<long long>(input.d) * input.target.degree_sum() + m - m * genus;
	return sign_power(exponent);
}

namespace {

std::string statement_text(const ComparisonReport &r)
{
	const auto &q = r.input.target;
	const int d = r.input.d;
	std::string text =
	    fmt::format("Q = complete intersection of degrees ({}) in P^{}, dim Q = {}, d = {}, k = {}\n",
	                fmt::join(q.degrees, ","), q.n, q.dimension(), d, r.input.k);
	if (q.dimension() == 2)
		text += fmt::format("GW_{{1,{0}}}(alpha) - GW^red_{{1,{0}}}(alpha) = 0\n", d);
	else
		text += fmt::format("GW_{{1,{0}}}(alpha) - GW^red_{{1,{0}}}(alpha) = (2 - c_1(T_Q).d[line])/24 * "
		                    "GW_{{0,{0}}}(alpha)\n  with c_1(T_Q).d[line] = ({1} + 1 - {2}) * {0} = {3}\n"
		                    "  = {4} * GW_{{0,{0}}}(alpha)\n",
		                    d, q.n, q.degree_sum(), q.first_chern_on_line() * d, to_string(r.coefficient_symbolic));
	if (r.correction)
		text += fmt::format("  = {}  (GW_{{0,{}}}(alpha) = {})\n", to_string(*r.correction), d,
		                    to_string(*r.input.gw0));
	return text;
}

} // namespace

ComparisonReport compare(const ComparisonInput &input)
{
	input.validate();
	const auto trace = coefficient_trace(input);
	ComparisonReport r;
	r.input = input;
	r.raw_pipeline_value = trace.raw;
	r.coefficient_symbolic = full_stratum_survives(input) ? discharge_sign(input, trace.raw) : Rational(0);
	r.coefficient_closed = coefficient_closed(input);
	r.sign_factor = sign_factor(input, 1);
	r.match = r.coefficient_symbolic == r.coefficient_closed;
	if (input.gw0)
		r.correction = r.coefficient_symbolic * *input.gw0;
	r.twisted_chern = trace.twisted_chern.to_string();
	r.euler = trace.euler.to_string();
	r.pushforward = trace.pushforward.to_string();
	r.segre_a = trace.segre_a.to_string();
	r.statement = statement_text(r);
	return r;
}

} // namespace redgw
