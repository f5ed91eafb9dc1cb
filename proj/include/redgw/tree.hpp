#pragma once

// Terminally weighted rooted trees with legs, and the advancing moves that
// walk a tree down to a path tree one branch choice at a time.

#include <compare>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace redgw {

class TreeError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

using VertexId = std::string;
using Leg = int;

struct Vertex
{
	VertexId id;
	std::optional<VertexId> parent;
	int weight = 0;
	std::set<Leg> legs;

	bool operator==(const Vertex &) const = default;
};

/// A rooted tree with non-negative vertex weights and legs labelled 1..k.
/// Construction checks the tree structure and the leg partition; whether the
/// weights are terminal is a separate predicate, since pruning starts from
/// arbitrary weightings.
class WeightedTree
{
  public:
	WeightedTree(VertexId root, const std::vector<Vertex> &vertices);

	const VertexId &root() const { return root_; }
	std::vector<VertexId> vertex_ids() const;
	std::vector<Vertex> vertex_list() const;
	std::size_t size() const { return nodes_.size(); }
	bool contains(const VertexId &v) const { return nodes_.count(v) != 0; }

	const std::optional<VertexId> &parent(const VertexId &v) const { return node(v).parent; }
	const std::set<VertexId> &children(const VertexId &v) const { return node(v).children; }
	int weight(const VertexId &v) const { return node(v).weight; }
	const std::set<Leg> &legs(const VertexId &v) const { return node(v).legs; }
	bool is_terminal(const VertexId &v) const { return node(v).children.empty(); }

	/// d: the sum of all weights.
	int total_weight() const;
	/// k: the number of legs.
	int leg_count() const;
	std::set<Leg> all_legs() const;

	int subtree_weight(const VertexId &v) const;
	std::set<Leg> subtree_legs(const VertexId &v) const;
	/// v and all of its descendants.
	std::vector<VertexId> subtree(const VertexId &v) const;

	bool is_terminally_weighted() const;
	bool is_path() const;

	bool operator==(const WeightedTree &) const = default;

  private:
	struct Node
	{
		std::optional<VertexId> parent;
		int weight = 0;
		std::set<Leg> legs;
		std::set<VertexId> children;

		bool operator==(const Node &) const = default;
	};

	const Node &node(const VertexId &v) const;

	VertexId root_;
	std::map<VertexId, Node> nodes_;
};

/// Multiset element (d_i, L_i) of a stratum.
struct StratumPart
{
	int degree = 0;
	std::vector<Leg> legs; // sorted

	auto operator<=>(const StratumPart &) const = default;
};

/// A multiset {(d_1, L_1), ..., (d_l, L_l)} with pairwise disjoint leg sets,
/// stored sorted so that equal multisets compare equal.
class Stratum
{
  public:
	Stratum() = default;
	explicit Stratum(std::vector<StratumPart> parts);

	const std::vector<StratumPart> &parts() const { return parts_; }
	std::size_t length() const { return parts_.size(); }
	int total_degree() const;
	std::set<Leg> legs() const;

	std::string to_string() const;

	auto operator<=>(const Stratum &) const = default;

  private:
	std::vector<StratumPart> parts_;
};

/// Trunk from the root down to the branch vertex (the root alone when the
/// root does not have exactly one child).
std::vector<VertexId> trunk(const WeightedTree &t);
VertexId branch_vertex(const WeightedTree &t);

/// Number of vertices off the trunk; strictly decreases along advancing.
std::size_t off_trunk_count(const WeightedTree &t);

/// Make a tree terminally weighted: a positive-weight vertex absorbs its whole
/// subtree, then weight-0 terminal vertices are removed with their legs moved
/// to the parent.
WeightedTree prune(const WeightedTree &t);

/// Advance at a child v of the branch vertex. A terminal v absorbs the weights
/// and legs of every other branch; a non-terminal v adopts the other branches
/// as its own children. Legs on the branch vertex itself stay there. When v's
/// parent is a trunk vertex with v as its only child the tree is returned
/// unchanged.
WeightedTree advance(const WeightedTree &t, const VertexId &v);

struct AdvancingSequence
{
	std::vector<VertexId> steps;
	WeightedTree path;
};

enum class EnumerationOrder
{
	lexicographic,
	reverse_lexicographic,
};

/// Every maximal advancing sequence together with the path tree it ends in.
std::vector<AdvancingSequence> advancing_sequences(const WeightedTree &t,
                                                   EnumerationOrder order = EnumerationOrder::lexicographic);

struct VertexStratum
{
	VertexId vertex;
	Stratum stratum;

	bool operator==(const VertexStratum &) const = default;
};

/// Strata attached to v_1..v_r, a_1..a_q of the final path tree, in path order.
/// Throws TreeError if the sequence is not a maximal advancing sequence of t.
std::vector<VertexStratum> assign_strata(const WeightedTree &t, std::span<const VertexId> sequence);

/// Union of assign_strata over all advancing sequences.
std::set<Stratum> enumerate_strata(const WeightedTree &t, EnumerationOrder order = EnumerationOrder::lexicographic);

/// Random terminally weighted tree: `vertices` vertices with random parents,
/// terminal weights in [1, max_weight], legs 1..legs scattered over vertices.
WeightedTree random_tree(std::mt19937_64 &rng, int vertices, int max_weight, int legs);

} // namespace redgw
