// redgw: command-line front end.
//
// Every subcommand prints one JSON document on stdout. Exit code 0 on
// success, 2 on invalid flags or inputs, 1 on internal errors.

#include "redgw/audit.hpp"
#include "redgw/chart.hpp"
#include "redgw/comparison.hpp"
#include "redgw/grassmann.hpp"
#include "redgw/selftest.hpp"
#include "redgw/serialize.hpp"
#include "redgw/tree.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace redgw;

struct Config
{
	int n = 0;
	std::vector<int> degrees;
	int d = 1;
	int k = 0;
	int genus = 1;
	std::string gw0;
	bool lines_gw0 = false;
	std::string tree_path;
	std::string vertex;
	bool p_fields = false;
	std::string out;
	std::uint64_t seed = 20240601;
	int verbosity = 0;
};

WeightedTree load_tree(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError(fmt::format("cannot open tree file '{}'", path));
	Json j;
	try
	{
		j = Json::parse(in);
	}
	catch (const Json::parse_error &e)
	{
		throw InputError(fmt::format("tree file '{}' is not JSON: {}", path, e.what()));
	}
	return tree_from_json(j);
}

CompleteIntersection target(const Config &c)
{
	CompleteIntersection q{c.n, c.degrees};
	q.validate();
	return q;
}

Json run_coefficient(const Config &c)
{
	ComparisonInput in{target(c), c.d, c.k, std::nullopt};
	if (!c.gw0.empty())
	{
		try
		{
			in.gw0 = parse_rational(c.gw0);
		}
		catch (const std::invalid_argument &e)
		{
			throw InputError(fmt::format("--gw0: {}", e.what()));
		}
	}
	else if (c.lines_gw0)
	{
		if (c.d != 1 || c.k != 0)
			throw InputError("--lines-gw0 needs d = 1 and k = 0");
		in.gw0 = Rational(line_count(c.n, c.degrees));
	}
	const auto report = compare(in);
	if (c.verbosity > 0)
		std::cerr << report.statement;
	auto j = to_json(report);
	if (c.genus != 1)
		j["sign_factor_genus"] = {{"genus", c.genus}, {"value", sign_factor(in, c.genus)}};
	return j;
}

Json run_audit(const Config &c)
{
	const auto strata = all_strata(c.d, c.k);
	return to_json(vanishing_verdicts(target(c), c.d, c.k, strata));
}

Json run_strata(const Config &c)
{
	const auto t = load_tree(c.tree_path);
	auto j = sequences_to_json(t, advancing_sequences(t));
	Json strata = Json::array();
	for (const auto &mu : enumerate_strata(t))
		strata.push_back(to_json(mu));
	j["strata"] = strata;
	return j;
}

Json run_advance(const Config &c)
{
	const auto t = load_tree(c.tree_path);
	if (!t.contains(c.vertex))
		throw InputError(fmt::format("vertex '{}' is not in the tree", c.vertex));
	return {{"input", to_json(t)}, {"vertex", c.vertex}, {"advanced", to_json(redgw::advance(t, c.vertex))}};
}

Json run_charts(const Config &c)
{
	const auto t = load_tree(c.tree_path);
	if (c.n < 1)
		throw InputError("--n must be at least 1");
	const int m = static_cast<int>(c.degrees.size());
	Json atlases = Json::array();
	for (const auto &seq : advancing_sequences(t))
	{
		auto atlas = to_json(build_atlas(t, seq.steps, c.n, m, c.p_fields));
		atlas.erase("tree");
		atlases.push_back(std::move(atlas));
	}
	Json j{{"tree", to_json(t)}, {"atlases", atlases}};
	if (c.p_fields)
		j["cosection"] = cosection_expr(c.n, m, c.degrees).to_string();
	return j;
}

Json run_lines(const Config &c)
{
	const auto chern = line_count(c.n, c.degrees);
	const auto pieri = line_count_schubert(c.n, c.degrees);
	return {{"n", c.n},
	        {"degrees", c.degrees},
	        {"count", chern.str()},
	        {"count_schubert", pieri.str()},
	        {"agree", chern == pieri}};
}

Json run_sign(const Config &c)
{
	const ComparisonInput in{target(c), c.d, c.k, std::nullopt};
	return {{"n", c.n}, {"degrees", c.degrees}, {"d", c.d}, {"genus", c.genus}, {"sign_factor", sign_factor(in, c.genus)}};
}

Json run_selftest_json(const Config &c, bool &ok)
{
	Json suites = Json::array();
	ok = true;
	for (const auto &r : run_selftest(c.seed))
	{
		ok = ok && r.passed;
		suites.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
		if (c.verbosity > 0)
			std::cerr << fmt::format("{:<20} {} ({} checks) {}\n", r.name, r.passed ? "ok" : "FAILED", r.checks,
			                         r.detail);
	}
	return {{"seed", c.seed}, {"suites", suites}, {"passed", ok}};
}

void write_report(const Config &c, const std::string &command, const std::string &text)
{
	std::filesystem::path path = c.out;
	if (path.empty())
	{
		const char *dir = std::getenv("REDGW_REPORT_DIR");
		if (!dir || !*dir)
			return;
		path = std::filesystem::path(dir) / (command + ".json");
	}
	std::ofstream f(path);
	if (!f)
		throw std::runtime_error(fmt::format("cannot write report to '{}'", path.string()));
	f << text;
}

} // namespace

int main(int argc, char **argv)
{
	Config c;
	CLI::App app{"Genus-one comparison coefficients, strata and line counts for complete intersections"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_option("--out", c.out, "Also write the JSON report to this file (default: $REDGW_REPORT_DIR/<command>.json)");
	app.add_flag("-v,--verbose", c.verbosity, "Print a human-readable summary on stderr");

	auto add_target = [&](CLI::App *sub, bool with_d) {
		sub->add_option("--n", c.n, "Ambient projective dimension")->required();
		sub->add_option("--degrees", c.degrees, "Comma-separated degrees of the defining equations")
		    ->delimiter(',')
		    ->required();
		if (with_d)
		{
			sub->add_option("--d", c.d, "Curve degree")->check(CLI::PositiveNumber);
			sub->add_option("--k", c.k, "Number of marked points")->check(CLI::NonNegativeNumber);
		}
	};

	auto *coefficient = app.add_subcommand("coefficient", "Comparison coefficient and correction term");
	add_target(coefficient, true);
	coefficient->add_option("--gw0", c.gw0, "Genus-zero invariant as an exact rational p or p/q");
	coefficient->add_flag("--lines-gw0", c.lines_gw0, "Fill gw0 with the line count (d = 1, k = 0)");
	coefficient->add_option("--genus", c.genus, "Also report the sign factor at this genus")->check(CLI::Range(0, 1));

	auto *audit = app.add_subcommand("audit", "Dimension audit of every stratum");
	add_target(audit, true);

	auto *sign = app.add_subcommand("sign", "Sign factor (-1)^(d sum deg + m - m g)");
	add_target(sign, true);
	sign->add_option("--genus", c.genus, "Genus, 0 or 1")->check(CLI::Range(0, 1));

	auto *strata = app.add_subcommand("strata", "Advancing sequences and strata of a tree");
	strata->add_option("--tree", c.tree_path, "Tree JSON file")->required();

	auto *adv = app.add_subcommand("advance", "Advance a tree at one vertex");
	adv->add_option("--tree", c.tree_path, "Tree JSON file")->required();
	adv->add_option("--vertex", c.vertex, "Child of the branch vertex")->required();

	auto *charts = app.add_subcommand("charts", "Chart equations for every advancing sequence");
	charts->add_option("--tree", c.tree_path, "Tree JSON file")->required();
	charts->add_option("--n", c.n, "Ambient projective dimension")->required();
	charts->add_option("--degrees", c.degrees, "Comma-separated degrees (sets m)")->delimiter(',');
	charts->add_flag("--p-fields", c.p_fields, "Include the p-field coordinates t_j");

	auto *lines = app.add_subcommand("lines", "Number of lines via two presentations of A*(G(2, n+1))");
	lines->add_option("--n", c.n, "Ambient projective dimension")->required();
	lines->add_option("--degrees", c.degrees, "Comma-separated degrees")->delimiter(',')->required();

	auto *selftest = app.add_subcommand("selftest", "Run every invariant suite");
	selftest->add_option("--seed", c.seed, "Random seed");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		const int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}

	try
	{
		Json j;
		bool ok = true;
		const auto *sub = app.get_subcommands().front();
		const std::string name = sub->get_name();
		if (sub == coefficient)
			j = run_coefficient(c);
		else if (sub == audit)
			j = run_audit(c);
		else if (sub == sign)
			j = run_sign(c);
		else if (sub == strata)
			j = run_strata(c);
		else if (sub == adv)
			j = run_advance(c);
		else if (sub == charts)
			j = run_charts(c);
		else if (sub == lines)
			j = run_lines(c);
		else
			j = run_selftest_json(c, ok);
		const auto text = dump(j);
		std::cout << text;
		write_report(c, name, text);
		return ok ? 0 : 1;
	}
	catch (const std::invalid_argument &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const TreeError &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return 1;
	}
}
