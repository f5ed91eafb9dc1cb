#include "redgw/selftest.hpp"

#include "redgw/audit.hpp"
#include "redgw/bundle.hpp"
#include "redgw/chart.hpp"
#include "redgw/comparison.hpp"
#include "redgw/grassmann.hpp"
#include "redgw/serialize.hpp"
#include "redgw/tree.hpp"

#include <fmt/format.h>

#include <functional>
#include <random>

namespace redgw {

namespace {

class Suite
{
  public:
	explicit Suite(std::string name) { result_.name = std::move(name); }

	void check(bool ok, const std::function<std::string()> &why)
	{
		++result_.checks;
		if (!ok && result_.passed)
		{
			result_.passed = false;
			result_.detail = why();
		}
	}

	SuiteResult finish() { return result_; }

  private:
	SuiteResult result_;
};

template <class F>
SuiteResult run_suite(const std::string &name, F &&body)
{
	Suite s(name);
	try
	{
		body(s);
	}
	catch (const std::exception &e)
	{
		s.check(false, [&] { return fmt::format("unexpected exception: {}", e.what()); });
	}
	return s.finish();
}

GradedClass random_class(std::mt19937_64 &rng, const Ring &ring, bool unit)
{
	std::uniform_int_distribution<int> coef(-5, 5);
	std::uniform_int_distribution<int> exp(0, 2);
	auto c = GradedClass::constant(ring, unit ? 1 : coef(rng));
	for (int t = 0; t < 4; ++t)
	{
		Exponents e(ring->size());
		for (auto &x : e)
			x = exp(rng);
		if (ring->degree_of(e) == 0)
			continue;
		c += GradedClass::monomial(ring, e, Rational(coef(rng), 1 + exp(rng)));
	}
	return c;
}

SuiteResult ring_suite(std::mt19937_64 &rng)
{
	return run_suite("ring_core", [&](Suite &s) {
		const Ring r = make_ring({{"a", 1, 3}, {"b", 1, std::nullopt}, {"c", 2, std::nullopt}}, 4);
		for (int i = 0; i < 50; ++i)
		{
			const auto x = random_class(rng, r, false);
			const auto y = random_class(rng, r, false);
			const auto z = random_class(rng, r, false);
			s.check((x * y) * z == x * (y * z), [] { return std::string("product is not associative"); });
			s.check(x * y == y * x, [] { return std::string("product is not commutative"); });
			s.check(x * (y + z) == x * y + x * z, [] { return std::string("product does not distribute"); });
			s.check((x - x).is_zero(), [] { return std::string("x - x is nonzero"); });
		}
	});
}

SuiteResult bundle_suite(std::mt19937_64 &rng)
{
	return run_suite("bundle_calc", [&](Suite &s) {
		const Ring r = make_ring({{"a", 1, std::nullopt}, {"b", 1, std::nullopt}}, 4);
		for (int i = 0; i < 30; ++i)
		{
			auto c1 = random_class(rng, r, true);
			auto c2 = random_class(rng, r, true);
			const BundleExpr e(4, c1), f(4, c2);
			s.check(total_segre(e) * e.total_chern() == GradedClass::constant(r, 1),
			        [] { return std::string("s(E) c(E) != 1"); });
			s.check(dual(dual(e)) == e, [] { return std::string("dual is not an involution"); });
			s.check(whitney_sum(e, f).total_chern() == e.total_chern() * f.total_chern(),
			        [] { return std::string("Whitney formula fails"); });
			const auto l = BundleExpr::line(random_class(rng, r, false).homogeneous(1));
			const auto back = BundleExpr::line(-l.chern(1));
			s.check(twist_by_line(twist_by_line(e, l), back) == e,
			        [] { return std::string("twisting by L then L^vee is not the identity"); });
		}
	});
}

SuiteResult tree_suite(std::mt19937_64 &rng)
{
	return run_suite("tree_comb", [&](Suite &s) {
		std::uniform_int_distribution<int> size(1, 8);
		for (int i = 0; i < 200; ++i)
		{
			const auto t = random_tree(rng, size(rng), 3, 3);
			const auto seqs = advancing_sequences(t);
			s.check(!seqs.empty(), [] { return std::string("no advancing sequence"); });
			for (const auto &seq : seqs)
			{
				s.check(seq.path.is_path(), [&] { return fmt::format("sequence ends in a non-path tree"); });
				s.check(seq.path.total_weight() == t.total_weight(),
				        [] { return std::string("advancing changes total weight"); });
				s.check(seq.path.all_legs() == t.all_legs(), [] { return std::string("advancing loses legs"); });
				for (const auto &vs : assign_strata(t, seq.steps))
					s.check(vs.stratum.total_degree() == t.total_weight(),
					        [] { return std::string("stratum degree differs from tree weight"); });
			}
			const auto fwd = enumerate_strata(t, EnumerationOrder::lexicographic);
			const auto rev = enumerate_strata(t, EnumerationOrder::reverse_lexicographic);
			s.check(fwd == rev, [] { return std::string("strata depend on enumeration order"); });
		}
	});
}

SuiteResult chart_suite(std::mt19937_64 &rng)
{
	return run_suite("chart_atlas", [&](Suite &s) {
		std::uniform_int_distribution<int> size(1, 7);
		for (int i = 0; i < 100; ++i)
		{
			const auto t = random_tree(rng, size(rng), 3, 2);
			const int n = 4, m = 1;
			for (const auto &seq : advancing_sequences(t))
			{
				const auto atlas = build_atlas(t, seq.steps, n, m, true);
				s.check(atlas.equations.size() == static_cast<std::size_t>(n + m),
				        [] { return std::string("wrong number of equations"); });
				for (const auto &eq : atlas.equations)
					s.check(eq.coordinates.size() == atlas.coordinates.size(),
					        [] { return std::string("equation is not tau~ times a fiber coordinate"); });
				const auto zero = restrict_to_zero_section(atlas);
				s.check(zero.equations.size() == static_cast<std::size_t>(n),
				        [] { return std::string("zero section keeps t-equations"); });
				s.check(std::holds_alternative<ReducedComponent>(atlas.branches.front().component),
				        [] { return std::string("first branch is not red"); });
			}
		}
	});
}

SuiteResult audit_suite()
{
	return run_suite("dim_audit", [&](Suite &s) {
		for (int dim : {2, 3})
			for (int d = 1; d <= 3; ++d)
				for (int k = 0; k <= 2; ++k)
				{
					const CompleteIntersection q{dim + 1, {3}};
					const auto strata = all_strata(d, k);
					const auto report = vanishing_verdicts(q, d, k, strata);
					for (const auto &v : report.strata)
					{
						const bool full = v.stratum.length() == 1 && static_cast<int>(v.stratum.legs().size()) == k;
						const bool expect = dim == 3 && full;
						s.check((v.verdict == Verdict::survives) == expect,
						        [&] { return fmt::format("wrong verdict for {}", v.stratum.to_string()); });
					}
					s.check(report.f_contribution_vanishes, [] { return std::string("F-contribution survives"); });
				}
	});
}

SuiteResult comparison_suite()
{
	return run_suite("comparison_engine", [&](Suite &s) {
		for (int n = 4; n <= 7; ++n)
			for (int w = 1; w <= 6; ++w)
				for (int d = 1; d <= 3; ++d)
				{
					std::vector<int> degrees(static_cast<std::size_t>(n - 3), 1);
					degrees.front() = w;
					const ComparisonInput in{{n, degrees}, d, 0, std::nullopt};
					const auto r = compare(in);
					s.check(r.match, [&] {
						return fmt::format("n={} w={} d={}: {} != {}", n, w, d, to_string(r.coefficient_symbolic),
						                   to_string(r.coefficient_closed));
					});
				}
		s.check(coefficient_symbolic({{3, {4}}, 1, 0, std::nullopt}) == 0,
		        [] { return std::string("surface coefficient is nonzero"); });
	});
}

SuiteResult grassmann_suite()
{
	return run_suite("grassmann_lines", [&](Suite &s) {
		const std::vector<std::pair<int, std::vector<int>>> cases{
		    {4, {5}}, {3, {3}}, {4, {2, 2}}, {5, {3, 3}}, {6, {2, 2, 3}}, {2, {1}}};
		for (const auto &[n, degs] : cases)
			s.check(line_count(n, degs) == line_count_schubert(n, degs),
			        [&] { return fmt::format("presentations disagree at n={}", n); });
		Integer catalan = 1;
		for (int n = 1; n <= 6; ++n)
		{
			if (n > 1)
				catalan = catalan * 2 * (2 * (n - 1) - 1) / n;
			s.check(sigma1_top_power_chern_roots(n) == Rational(catalan) &&
			            sigma1_top_power_schubert(n) == Rational(catalan),
			        [&] { return fmt::format("Catalan check fails at n={}", n); });
		}
	});
}

SuiteResult serialize_suite(std::mt19937_64 &rng)
{
	return run_suite("serialize", [&](Suite &s) {
		for (int i = 0; i < 50; ++i)
		{
			const auto t = random_tree(rng, 6, 3, 3);
			s.check(tree_from_json(Json::parse(dump(to_json(t)))) == t,
			        [] { return std::string("tree JSON round trip fails"); });
		}
		const auto report = compare({{4, {5}}, 2, 1, Rational(609250)});
		const auto text = dump(to_json(report));
		s.check(dump(to_json(report_from_json(Json::parse(text)))) == text,
		        [] { return std::string("report JSON round trip is not byte-identical"); });
	});
}

} // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::vector<SuiteResult> out;
	out.push_back(ring_suite(rng));
	out.push_back(bundle_suite(rng));
	out.push_back(tree_suite(rng));
	out.push_back(chart_suite(rng));
	out.push_back(audit_suite());
	out.push_back(comparison_suite());
	out.push_back(grassmann_suite());
	out.push_back(serialize_suite(rng));
	return out;
}

} // namespace redgw
