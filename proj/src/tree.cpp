#include "redgw/tree.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <functional>

namespace redgw {

WeightedTree::WeightedTree(VertexId root, const std::vector<Vertex> &vertices) : root_(std::move(root))
{
	for (const auto &v : vertices)
	{
		if (v.weight < 0)
			throw TreeError(fmt::format("vertex '{}' has negative weight", v.id));
		if (!nodes_.emplace(v.id, Node{v.parent, v.weight, v.legs, {}}).second)
			throw TreeError(fmt::format("duplicate vertex id '{}'", v.id));
	}
	auto root_it = nodes_.find(root_);
	if (root_it == nodes_.end())
		throw TreeError(fmt::format("root '{}' is not a vertex", root_));
	if (root_it->second.parent)
		throw TreeError("the root has a parent");
	for (auto &[id, n] : nodes_)
	{
		if (id == root_)
			continue;
		if (!n.parent)
			throw TreeError(fmt::format("vertex '{}' has no parent but is not the root", id));
		auto p = nodes_.find(*n.parent);
		if (p == nodes_.end())
			throw TreeError(fmt::format("vertex '{}' has unknown parent '{}'", id, *n.parent));
		p->second.children.insert(id);
	}
	// Every vertex must reach the root without revisiting anything.
	for (const auto &[id, n] : nodes_)
	{
		std::set<VertexId> seen{id};
		const Node *cur = &n;
		while (cur->parent)
		{
			if (!seen.insert(*cur->parent).second)
				throw TreeError(fmt::format("cycle through vertex '{}'", id));
			cur = &nodes_.at(*cur->parent);
		}
	}
	std::set<Leg> legs;
	std::size_t count = 0;
	for (const auto &[id, n] : nodes_)
	{
		for (Leg l : n.legs)
			if (!legs.insert(l).second)
				throw TreeError(fmt::format("leg {} is attached twice", l));
		count += n.legs.size();
	}
	for (std::size_t i = 1; i <= count; ++i)
		if (!legs.count(static_cast<Leg>(i)))
			throw TreeError(fmt::format("legs must be exactly 1..{}; {} is missing", count, i));
}

const WeightedTree::Node &WeightedTree::node(const VertexId &v) const
{
	auto it = nodes_.find(v);
	if (it == nodes_.end())
		throw TreeError(fmt::format("unknown vertex '{}'", v));
	return it->second;
}

std::vector<VertexId> WeightedTree::vertex_ids() const
{
	std::vector<VertexId> ids;
	for (const auto &[id, n] : nodes_)
		ids.push_back(id);
	return ids;
}

std::vector<Vertex> WeightedTree::vertex_list() const
{
	std::vector<Vertex> out;
	for (const auto &[id, n] : nodes_)
		out.push_back(Vertex{id, n.parent, n.weight, n.legs});
	return out;
}

int WeightedTree::total_weight() const { return subtree_weight(root_); }

int WeightedTree::leg_count() const
{
	int k = 0;
	for (const auto &[id, n] : nodes_)
		k += static_cast<int>(n.legs.size());
	return k;
}

std::set<Leg> WeightedTree::all_legs() const { return subtree_legs(root_); }

std::vector<VertexId> WeightedTree::subtree(const VertexId &v) const
{
	std::vector<VertexId> out{v};
	for (std::size_t i = 0; i < out.size(); ++i)
		for (const auto &c : node(out[i]).children)
			out.push_back(c);
	return out;
}

int WeightedTree::subtree_weight(const VertexId &v) const
{
	int w = 0;
	for (const auto &u : subtree(v))
		w += node(u).weight;
	return w;
}

std::set<Leg> WeightedTree::subtree_legs(const VertexId &v) const
{
	std::set<Leg> out;
	for (const auto &u : subtree(v))
		out.insert(node(u).legs.begin(), node(u).legs.end());
	return out;
}

bool WeightedTree::is_terminally_weighted() const
{
	return std::all_of(nodes_.begin(), nodes_.end(),
	                   [](const auto &kv) { return (kv.second.weight > 0) == kv.second.children.empty(); });
}

bool WeightedTree::is_path() const
{
	return std::all_of(nodes_.begin(), nodes_.end(), [](const auto &kv) { return kv.second.children.size() <= 1; });
}

Stratum::Stratum(std::vector<StratumPart> parts) : parts_(std::move(parts))
{
	std::set<Leg> seen;
	for (auto &p : parts_)
	{
		if (p.degree < 0)
			throw TreeError("stratum part with negative degree");
		std::sort(p.legs.begin(), p.legs.end());
		for (Leg l : p.legs)
			if (!seen.insert(l).second)
				throw TreeError(fmt::format("leg {} appears in two parts of a stratum", l));
	}
	std::sort(parts_.begin(), parts_.end());
}

int Stratum::total_degree() const
{
	int d = 0;
	for (const auto &p : parts_)
		d += p.degree;
	return d;
}

std::set<Leg> Stratum::legs() const
{
	std::set<Leg> out;
	for (const auto &p : parts_)
		out.insert(p.legs.begin(), p.legs.end());
	return out;
}

std::string Stratum::to_string() const
{
	std::vector<std::string> parts;
	for (const auto &p : parts_)
		parts.push_back(fmt::format("({}, {{{}}})", p.degree, fmt::join(p.legs, ",")));
	return fmt::format("{{{}}}", fmt::join(parts, ", "));
}

namespace {

void require_terminally_weighted(const WeightedTree &t, const char *op)
{
	if (!t.is_terminally_weighted())
		throw TreeError(fmt::format("{} needs a terminally weighted tree", op));
}

} // namespace

std::vector<VertexId> trunk(const WeightedTree &t)
{
	std::vector<VertexId> path{t.root()};
	while (t.children(path.back()).size() == 1)
		path.push_back(*t.children(path.back()).begin());
	return path;
}

VertexId branch_vertex(const WeightedTree &t) { return trunk(t).back(); }

std::size_t off_trunk_count(const WeightedTree &t) { return t.size() - trunk(t).size(); }

WeightedTree prune(const WeightedTree &t)
{
	auto vertices = t.vertex_list();
	std::map<VertexId, Vertex> by_id;
	for (auto &v : vertices)
		by_id.emplace(v.id, v);

	// Absorb subtrees below positive-weight vertices, top-down.
	std::vector<VertexId> order = t.subtree(t.root());
	std::set<VertexId> removed;
	for (const auto &id : order)
	{
		if (removed.count(id) || by_id.at(id).weight == 0 || t.is_terminal(id))
			continue;
		auto &v = by_id.at(id);
		for (const auto &u : t.subtree(id))
		{
			if (u == id)
				continue;
			v.weight += t.weight(u);
			v.legs.insert(t.legs(u).begin(), t.legs(u).end());
			removed.insert(u);
		}
	}
	for (const auto &id : removed)
		by_id.erase(id);

	// Drop weight-0 terminal vertices bottom-up, handing their legs upward.
	bool changed = true;
	while (changed)
	{
		changed = false;
		std::set<VertexId> has_child;
		for (const auto &[id, v] : by_id)
			if (v.parent)
				has_child.insert(*v.parent);
		for (auto it = by_id.begin(); it != by_id.end();)
		{
			const Vertex &v = it->second;
			if (v.parent && v.weight == 0 && !has_child.count(v.id))
			{
				auto &p = by_id.at(*v.parent);
				p.legs.insert(v.legs.begin(), v.legs.end());
				it = by_id.erase(it);
				changed = true;
			}
			else
				++it;
		}
	}
	std::vector<Vertex> out;
	for (auto &[id, v] : by_id)
		out.push_back(std::move(v));
	return WeightedTree(t.root(), out);
}

WeightedTree advance(const WeightedTree &t, const VertexId &v)
{
	require_terminally_weighted(t, "advance");
	if (!t.contains(v))
		throw TreeError(fmt::format("unknown vertex '{}'", v));
	const auto &p = t.parent(v);
	const auto path = trunk(t);
	if (!p || std::find(path.begin(), path.end(), *p) == path.end())
		throw TreeError(fmt::format("vertex '{}' is not a direct descendant of a trunk vertex", v));
	if (*p != path.back())
		return t; // single-child trunk vertex: nothing to move

	auto vertices = t.vertex_list();
	std::map<VertexId, Vertex> by_id;
	for (auto &x : vertices)
		by_id.emplace(x.id, std::move(x));

	const VertexId &branch = *p;
	for (const auto &sibling : t.children(branch))
	{
		if (sibling == v)
			continue;
		if (t.is_terminal(v))
		{
			auto &target = by_id.at(v);
			for (const auto &u : t.subtree(sibling))
			{
				target.weight += t.weight(u);
				target.legs.insert(t.legs(u).begin(), t.legs(u).end());
				by_id.erase(u);
			}
		}
		else
			by_id.at(sibling).parent = v;
	}
	std::vector<Vertex> out;
	for (auto &[id, x] : by_id)
		out.push_back(std::move(x));
	return prune(WeightedTree(t.root(), out));
}

std::vector<AdvancingSequence> advancing_sequences(const WeightedTree &t, EnumerationOrder order)
{
	require_terminally_weighted(t, "advancing_sequences");
	std::vector<AdvancingSequence> out;
	std::vector<VertexId> prefix;
	std::function<void(const WeightedTree &)> walk = [&](const WeightedTree &cur) {
		if (cur.is_path())
		{
			out.push_back(AdvancingSequence{prefix, cur});
			return;
		}
		const auto &kids = cur.children(branch_vertex(cur));
		std::vector<VertexId> choices(kids.begin(), kids.end());
		if (order == EnumerationOrder::reverse_lexicographic)
			std::reverse(choices.begin(), choices.end());
		for (const auto &c : choices)
		{
			prefix.push_back(c);
			walk(redgw::advance(cur, c));
			prefix.pop_back();
		}
	};
	walk(t);
	return out;
}

std::vector<VertexStratum> assign_strata(const WeightedTree &t, std::span<const VertexId> sequence)
{
	require_terminally_weighted(t, "assign_strata");
	const int d = t.total_weight();
	WeightedTree cur = t;
	std::vector<Stratum> advanced;
	for (const auto &step : sequence)
	{
		if (cur.is_path())
			throw TreeError(fmt::format("advancing sequence continues past a path tree at '{}'", step));
		const VertexId b = branch_vertex(cur);
		if (!cur.contains(step) || cur.parent(step) != b)
			throw TreeError(fmt::format("'{}' is not a direct descendant of the branch vertex '{}'", step, b));
		std::vector<StratumPart> parts;
		for (const auto &c : cur.children(b))
		{
			const auto legs = cur.subtree_legs(c);
			parts.push_back(StratumPart{cur.subtree_weight(c), std::vector<Leg>(legs.begin(), legs.end())});
		}
		advanced.emplace_back(std::move(parts));
		cur = redgw::advance(cur, step);
	}
	if (!cur.is_path())
		throw TreeError("advancing sequence is not maximal: the result is not a path tree");

	const auto path = trunk(cur);
	const auto original_trunk = trunk(t);
	const std::size_t r = original_trunk.size() - 1;
	if (path.size() != r + 1 + sequence.size())
		throw TreeError("advancing sequence does not extend the trunk one vertex per step");
	for (std::size_t j = 0; j < sequence.size(); ++j)
		if (path[r + 1 + j] != sequence[j])
			throw TreeError("advancing sequence does not extend the trunk one vertex per step");

	std::vector<VertexStratum> out;
	for (std::size_t i = 1; i < path.size(); ++i)
	{
		if (i <= r)
		{
			std::vector<Leg> legs;
			for (std::size_t j = i; j < path.size(); ++j)
				legs.insert(legs.end(), cur.legs(path[j]).begin(), cur.legs(path[j]).end());
			out.push_back(VertexStratum{path[i], Stratum({StratumPart{d, legs}})});
		}
		else
			out.push_back(VertexStratum{path[i], advanced[i - r - 1]});
	}
	return out;
}

std::set<Stratum> enumerate_strata(const WeightedTree &t, EnumerationOrder order)
{
	std::set<Stratum> out;
	for (const auto &seq : advancing_sequences(t, order))
		for (auto &vs : assign_strata(t, seq.steps))
			out.insert(std::move(vs.stratum));
	return out;
}

WeightedTree random_tree(std::mt19937_64 &rng, int vertices, int max_weight, int legs)
{
	if (vertices < 1 || max_weight < 1 || legs < 0)
		throw TreeError("random_tree: bad parameters");
	auto name = [](int i) { return fmt::format("v{:02}", i); };
	std::vector<Vertex> vs(static_cast<std::size_t>(vertices));
	std::vector<bool> has_child(vs.size(), false);
	for (int i = 0; i < vertices; ++i)
	{
		vs[i].id = name(i);
		if (i > 0)
		{
			const int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
			vs[i].parent = name(p);
			has_child[p] = true;
		}
	}
	for (int i = 0; i < vertices; ++i)
		if (!has_child[i])
			vs[i].weight = std::uniform_int_distribution<int>(1, max_weight)(rng);
	for (int l = 1; l <= legs; ++l)
		vs[std::uniform_int_distribution<int>(0, vertices - 1)(rng)].legs.insert(l);
	return WeightedTree(name(0), vs);
}

} // namespace redgw
