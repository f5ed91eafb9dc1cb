#include "redgw/tree.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace redgw;

namespace {

// a - b - {c, d}; c terminal with leg 1; d carries legs 2, 3 and the
// branches g1, g2.
WeightedTree example_tree()
{
	return WeightedTree("a", {{"a", std::nullopt, 0, {}},
	                          {"b", "a", 0, {}},
	                          {"c", "b", 2, {1}},
	                          {"d", "b", 0, {2, 3}},
	                          {"g1", "d", 1, {}},
	                          {"g2", "d", 3, {}}});
}

std::map<VertexId, std::pair<std::optional<VertexId>, int>> shape(const WeightedTree &t)
{
	std::map<VertexId, std::pair<std::optional<VertexId>, int>> out;
	for (const auto &v : t.vertex_list())
		out[v.id] = {v.parent, v.weight};
	return out;
}

// Number of maximal advancing sequences from a branch vertex whose children
// are the subtrees rooted at `branches`: advancing at a terminal child ends
// the sequence, advancing at u makes u the branch vertex of
// children(u) + (branches - u).
long long count_sequences(const WeightedTree &t, std::vector<VertexId> branches)
{
	if (branches.size() <= 1)
	{
		if (branches.empty())
			return 1;
		const auto &kids = t.children(branches.front());
		return count_sequences(t, {kids.begin(), kids.end()});
	}
	long long total = 0;
	for (std::size_t i = 0; i < branches.size(); ++i)
	{
		const auto &u = branches[i];
		if (t.is_terminal(u))
		{
			++total;
			continue;
		}
		std::vector<VertexId> next(t.children(u).begin(), t.children(u).end());
		for (std::size_t j = 0; j < branches.size(); ++j)
			if (j != i)
				next.push_back(branches[j]);
		total += count_sequences(t, next);
	}
	return total;
}

long long count_sequences(const WeightedTree &t) { return count_sequences(t, {t.root()}); }

} // namespace

TEST(Tree, RejectsMalformedTrees)
{
	EXPECT_THROW(WeightedTree("r", {{"r", std::nullopt, 1, {}}, {"r", std::nullopt, 1, {}}}), TreeError);
	EXPECT_THROW(WeightedTree("x", {{"r", std::nullopt, 1, {}}}), TreeError);
	EXPECT_THROW(WeightedTree("r", {{"r", "s", 1, {}}, {"s", "r", 1, {}}}), TreeError);
	EXPECT_THROW(WeightedTree("r", {{"r", std::nullopt, 0, {}}, {"s", "q", 1, {}}}), TreeError);
	EXPECT_THROW(WeightedTree("r", {{"r", std::nullopt, 1, {1}}, {"s", "r", 1, {1}}}), TreeError);
	EXPECT_THROW(WeightedTree("r", {{"r", std::nullopt, 1, {2}}}), TreeError);
	EXPECT_THROW(WeightedTree("r", {{"r", std::nullopt, -1, {}}}), TreeError);
}

TEST(Tree, TrunkAndBranchVertex)
{
	const auto t = example_tree();
	EXPECT_EQ(trunk(t), (std::vector<VertexId>{"a", "b"}));
	EXPECT_EQ(branch_vertex(t), "b");
	EXPECT_EQ(t.total_weight(), 6);
	EXPECT_EQ(t.leg_count(), 3);
	EXPECT_TRUE(t.is_terminally_weighted());
	EXPECT_FALSE(t.is_path());
	EXPECT_EQ(off_trunk_count(t), 4u);
}

TEST(Tree, AdvanceAtTerminalVertex)
{
	const auto t = example_tree();
	const auto r = advance(t, "c");
	const decltype(shape(r)) expected{{"a", {std::nullopt, 0}}, {"b", {"a", 0}}, {"c", {"b", 6}}};
	EXPECT_EQ(shape(r), expected);
	EXPECT_EQ(r.legs("c"), (std::set<Leg>{1, 2, 3}));
	EXPECT_TRUE(r.legs("a").empty());
	EXPECT_TRUE(r.legs("b").empty());
	EXPECT_TRUE(r.is_path());
}

TEST(Tree, AdvanceAtNonTerminalVertex)
{
	const auto t = example_tree();
	const auto r = advance(t, "d");
	const decltype(shape(r)) expected{{"a", {std::nullopt, 0}}, {"b", {"a", 0}}, {"c", {"d", 2}},
	                                  {"d", {"b", 0}},          {"g1", {"d", 1}}, {"g2", {"d", 3}}};
	EXPECT_EQ(shape(r), expected);
	EXPECT_EQ(r.legs("c"), (std::set<Leg>{1}));
	EXPECT_EQ(r.legs("d"), (std::set<Leg>{2, 3}));
	EXPECT_EQ(branch_vertex(r), "d");
}

TEST(Tree, AdvanceRejectsNonChildren)
{
	const auto t = example_tree();
	EXPECT_THROW(advance(t, "g1"), TreeError);
	EXPECT_THROW(advance(t, "a"), TreeError);
	EXPECT_THROW(advance(t, "zz"), TreeError);
	// b is the only child of the trunk vertex a.
	EXPECT_EQ(advance(t, "b"), t);
}

TEST(Tree, LegsOnBranchVertexStay)
{
	const WeightedTree t("r", {{"r", std::nullopt, 0, {1}}, {"x", "r", 1, {2}}, {"y", "r", 2, {}}});
	const auto r = advance(t, "x");
	EXPECT_EQ(r.legs("r"), (std::set<Leg>{1}));
	EXPECT_EQ(r.legs("x"), (std::set<Leg>{2}));
	EXPECT_EQ(r.weight("x"), 3);
}

TEST(Tree, PruneMakesTreesTerminallyWeighted)
{
	// Positive weight on a non-terminal vertex absorbs its subtree; a
	// weight-0 leaf hands its legs to its parent.
	const WeightedTree t("r", {{"r", std::nullopt, 0, {}},
	                           {"p", "r", 2, {}},
	                           {"q", "p", 1, {1}},
	                           {"z", "r", 0, {2}},
	                           {"s", "r", 1, {}}});
	const auto p = prune(t);
	EXPECT_TRUE(p.is_terminally_weighted());
	EXPECT_EQ(p.vertex_ids(), (std::vector<VertexId>{"p", "r", "s"}));
	EXPECT_EQ(p.weight("p"), 3);
	EXPECT_EQ(p.legs("p"), (std::set<Leg>{1}));
	EXPECT_EQ(p.legs("r"), (std::set<Leg>{2}));
	EXPECT_EQ(prune(p), p);
}

TEST(Tree, SequencesOfTheExample)
{
	const auto t = example_tree();
	const auto seqs = advancing_sequences(t);
	std::vector<std::vector<VertexId>> steps;
	for (const auto &s : seqs)
		steps.push_back(s.steps);
	const std::vector<std::vector<VertexId>> expected{{"c"}, {"d", "c"}, {"d", "g1"}, {"d", "g2"}};
	EXPECT_EQ(steps, expected);
	EXPECT_EQ(static_cast<long long>(seqs.size()), count_sequences(t));
}

TEST(Tree, StrataOfTwoBranchTree)
{
	// root - v - {x, y}: advancing at x gives the chain root, v, x.
	const WeightedTree t("root", {{"root", std::nullopt, 0, {}},
	                              {"v", "root", 0, {}},
	                              {"x", "v", 1, {1}},
	                              {"y", "v", 2, {2}}});
	const std::vector<VertexId> seq{"x"};
	const auto strata = assign_strata(t, seq);
	ASSERT_EQ(strata.size(), 2u);
	EXPECT_EQ(strata[0].vertex, "v");
	EXPECT_EQ(strata[0].stratum.to_string(), "{(3, {1,2})}");
	EXPECT_EQ(strata[1].vertex, "x");
	EXPECT_EQ(strata[1].stratum.to_string(), "{(1, {1}), (2, {2})}");

	const std::vector<VertexId> bad{"y", "x"};
	EXPECT_THROW(assign_strata(t, bad), TreeError);
	const std::vector<VertexId> none;
	EXPECT_THROW(assign_strata(t, none), TreeError);
}

TEST(Tree, StratumOrdering)
{
	const Stratum a(std::vector<StratumPart>{{2, {1}}, {1, {}}});
	const Stratum b(std::vector<StratumPart>{{1, {}}, {2, {1}}});
	EXPECT_EQ(a, b);
	EXPECT_EQ(a.total_degree(), 3);
	EXPECT_THROW(Stratum(std::vector<StratumPart>{{1, {1}}, {1, {1}}}), TreeError);
}

TEST(TreeProperty, AdvancingConservesWeightAndLegs)
{
	std::mt19937_64 rng(2024);
	std::uniform_int_distribution<int> size(1, 10), legs(0, 4);
	for (int i = 0; i < 1000; ++i)
	{
		const auto t = random_tree(rng, size(rng), 4, legs(rng));
		ASSERT_TRUE(t.is_terminally_weighted());
		if (t.is_path())
			continue;
		for (const auto &c : t.children(branch_vertex(t)))
		{
			const auto r = advance(t, c);
			ASSERT_EQ(r.total_weight(), t.total_weight());
			ASSERT_EQ(r.all_legs(), t.all_legs());
			ASSERT_TRUE(r.is_terminally_weighted());
			ASSERT_LT(off_trunk_count(r), off_trunk_count(t));
		}
	}
}

TEST(TreeProperty, SequencesTerminateInPaths)
{
	std::mt19937_64 rng(99);
	std::uniform_int_distribution<int> size(1, 9), legs(0, 3);
	for (int i = 0; i < 300; ++i)
	{
		const auto t = random_tree(rng, size(rng), 3, legs(rng));
		const auto seqs = advancing_sequences(t);
		ASSERT_EQ(static_cast<long long>(seqs.size()), count_sequences(t));
		for (const auto &s : seqs)
		{
			ASSERT_TRUE(s.path.is_path());
			ASSERT_EQ(s.path.total_weight(), t.total_weight());
			ASSERT_EQ(s.path.all_legs(), t.all_legs());
			ASSERT_LE(s.steps.size(), t.size());
			for (const auto &vs : assign_strata(t, s.steps))
			{
				ASSERT_EQ(vs.stratum.total_degree(), t.total_weight());
				for (const auto &p : vs.stratum.parts())
					ASSERT_GE(p.degree, 1);
			}
		}
		ASSERT_EQ(enumerate_strata(t, EnumerationOrder::lexicographic),
		          enumerate_strata(t, EnumerationOrder::reverse_lexicographic));
	}
}
