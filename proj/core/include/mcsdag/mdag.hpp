#ifndef MCSDAG_MDAG_HPP
#define MCSDAG_MDAG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcsdag/swings.hpp"

namespace mcsdag {

using NodeId = std::uint32_t;

inline constexpr NodeId kSource = 0;
inline constexpr NodeId kSink = 1;

/// Final byte of every label entering the sink.
inline constexpr char kTerminator = '$';

/// Key carried by the sink, which represents no prefix.
inline constexpr Quadruple kSinkQuadruple{kInfinity, kInfinity, kInfinity, kInfinity};

struct MdagEdge {
    NodeId target = kSink;
    std::string label;
};

struct MdagNode {
    Quadruple key;
    std::vector<MdagEdge> out; // sorted by first label byte
};

struct MdagFlags {
    bool built = false;
    bool pruned = false;
    bool compacted = false;
    bool verified = false;

    friend bool operator==(const MdagFlags&, const MdagFlags&) = default;
};

/// Thrown when a graph breaks one of the structural MDAG invariants.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/*
 * Node- and edge-labelled DAG whose source-to-sink paths spell the maximal
 * common subsequences of two strings, each followed by kTerminator.
 *
 * Node 0 is the source, node 1 the sink. Out-edges of a node have pairwise
 * distinct first bytes and are kept sorted by them, so sibling order is
 * lexicographic order.
 */
class Mdag {
public:
    Mdag();

    NodeId add_node(const Quadruple& key);

    /// Inserts keeping the out-list sorted; throws invariant_error on a
    /// duplicate first byte or an empty label.
    void add_edge(NodeId from, NodeId to, std::string label);

    const MdagNode& node(NodeId id) const { return nodes_.at(id); }
    std::span<const MdagNode> nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const MdagFlags& flags() const { return flags_; }
    MdagFlags& flags() { return flags_; }

    // Shape of the inputs the graph was built from.
    std::uint32_t x_length = 0;
    std::uint32_t y_length = 0;
    std::uint32_t sigma = 0;

    /// Label bytes that spell characters, i.e. without the trailing
    /// terminator on edges into the sink.
    static std::string_view spelled(const MdagEdge& e) {
        std::string_view s = e.label;
        if (e.target == kSink) {
            s.remove_suffix(1);
        }
        return s;
    }

private:
    std::vector<MdagNode> nodes_;
    std::size_t edge_count_ = 0;
    MdagFlags flags_;
};

/// Checks acyclicity, unique source and sink, distinct first bytes per node,
/// terminator placement, reachability of the sink from every node, distinct
/// quadruples and, once compacted, out-degree >= 2 for inner nodes. Throws
/// invariant_error naming the first violation.
void validate(const Mdag& g);

/// Node ids in topological order (source first, sink last).
std::vector<NodeId> topological_order(const Mdag& g);

/// Copy renumbered into canonical order: source 0, sink 1, remaining nodes
/// by reverse DFS postorder from the source with edges taken in label
/// order. The result depends only on graph structure and labels, so equal
/// graphs serialize identically. Nodes unreachable from the source are
/// dropped.
Mdag canonicalize(const Mdag& g);

/// Every label sequence from source to sink with terminators stripped, in
/// lexicographic order. Exponential; intended for tests and small inputs.
std::vector<std::string> spell_all(const Mdag& g);

} // namespace mcsdag

#endif
