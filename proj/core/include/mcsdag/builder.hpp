#ifndef MCSDAG_BUILDER_HPP
#define MCSDAG_BUILDER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "mcsdag/mdag.hpp"

namespace mcsdag {

/*
 * Associative store of quadruple -> node id.
 *
 * Keys are bucketed by (l, m); each bucket is an ordered tree over the swing
 * pair (t, b), so lookups are O(1) + O(log bucket) and bucket sizes double
 * as the per-(l, m) multiplicity measure.
 */
class QuadrupleMemo {
public:
    /// Returns the node registered for q, or registers `fresh` for it.
    /// The flag is true when q was already present.
    std::pair<NodeId, bool> lookup_or_insert(const Quadruple& q, NodeId fresh);

    std::optional<NodeId> find(const Quadruple& q) const;

    std::size_t size() const { return size_; }

private:
    static std::uint64_t bucket_key(const Quadruple& q) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(q.l)) << 32) |
               static_cast<std::uint32_t>(q.m);
    }

    std::unordered_map<std::uint64_t, std::map<std::pair<Position, Position>, NodeId>> buckets_;
    std::size_t size_ = 0;
};

class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BuildLimits {
    /// Abort expansion once this many nodes exist (0 = unlimited).
    std::size_t max_nodes = 0;
};

/// Depth-first expansion from the source quadruple; the result may still
/// contain dead nodes that never reach the sink. Flags: built.
Mdag expand_mdag(std::string_view x, std::string_view y, const BuildLimits& limits = {});

/// Removes nodes that cannot reach the sink and renumbers canonically.
/// Throws invariant_error if the source itself would be removed.
Mdag prune_mdag(const Mdag& g);

/// expand_mdag followed by prune_mdag.
Mdag build_mdag(std::string_view x, std::string_view y, const BuildLimits& limits = {});

/// Collapses every unary chain into one edge with the concatenated label.
/// Requires a pruned graph.
Mdag compact_mdag(const Mdag& g);

struct MdagStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t max_out_degree = 0;
    /// Longest source-to-sink path, in edges.
    std::size_t depth = 0;
    std::size_t distinct_lm = 0;
    std::size_t max_lm_multiplicity = 0;
    /// Node pairs sharing (l, m) whose swing pairs dominate one another.
    std::size_t antichain_violations = 0;
    /// (l, m) buckets holding 2n or more nodes, n = max(|X|, |Y|).
    std::size_t pareto_violations = 0;
};

MdagStats stats(const Mdag& g);

/*
 * Swing order across parents with different (l, m) whose edges with the same
 * character reach children sharing (l, m):
 *   forward: t(parent) < t(parent') but t(child) > t(child')
 *   reverse: t(child) < t(child') but not t(parent) < t(parent')
 * and likewise for b. Each field counts violating ordered pairs. Expects
 * single-character edges.
 */
struct MonotonicityReport {
    std::size_t forward = 0;
    std::size_t reverse = 0;
};

MonotonicityReport check_monotonicity(const Mdag& g);

} // namespace mcsdag

#endif
