#ifndef MCSDAG_QUERY_HPP
#define MCSDAG_QUERY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcsdag/mdag.hpp"

namespace mcsdag {

/// Path counts grow exponentially with the input length.
using BigInt = boost::multiprecision::cpp_int;

/*
 * p(u) = number of u-to-sink paths, plus for every node the running sum of
 * p over its out-edges in label order: edge_offsets[u][k] is the number of
 * strings below u that are lexicographically smaller than those through
 * edge k.
 */
struct PathCountAnnotation {
    std::vector<BigInt> paths;
    std::vector<std::vector<BigInt>> edge_offsets;
};

PathCountAnnotation annotate_counts(const Mdag& g);

enum class EmitMode {
    full,       ///< every emission carries the whole string (keep == 0)
    compressed, ///< keep `keep` bytes of the previous output, append `suffix`
};

struct Emission {
    std::string_view text; ///< the complete string, valid during the callback
    std::size_t keep = 0;
    std::string_view suffix;
};

/// Return false to stop the enumeration.
using EmitCallback = std::function<bool(const Emission&)>;

struct EnumerationStats {
    std::uint64_t solutions = 0;
    /// Recursion frames opened (one per node visit, sink included).
    std::uint64_t frames = 0;
    bool stopped_early = false;
};

class not_member_error : public std::runtime_error {
public:
    enum class Reason {
        no_matching_edge,       ///< no out-edge starts with the next byte
        label_mismatch,         ///< fell off a label mid-edge
        ended_mid_edge,         ///< input exhausted inside a label
        ended_at_inner_node,    ///< input exhausted at a node that is not terminal
        overran_terminal,       ///< input continues after a complete member
    };

    not_member_error(Reason reason, std::size_t offset);

    Reason reason() const { return reason_; }
    /// Byte offset in the query string where matching stopped.
    std::size_t offset() const { return offset_; }

private:
    Reason reason_;
    std::size_t offset_;
};

const char* to_string(not_member_error::Reason reason);

class MdagQuery;

/*
 * Resumable lexicographic traversal. Holds a stack of (node, next out-edge,
 * buffer length) frames and the current prefix buffer; every call to next()
 * resumes the DFS until the following solution. Since inner nodes of a
 * compacted MDAG branch at least twice, frames opened stay below twice the
 * number of solutions.
 */
class EnumCursor {
public:
    /// Advances to the next string; std::nullopt when exhausted.
    std::optional<Emission> next();

    bool done() const { return stack_.empty(); }
    std::uint64_t emitted() const { return stats_.solutions; }
    const EnumerationStats& stats() const { return stats_; }

private:
    friend class MdagQuery;

    struct Frame {
        NodeId node;
        std::size_t next_edge;
        std::size_t length; // buffer length on entry
    };

    EnumCursor(const Mdag& g, NodeId start, std::string prefix);
    EnumCursor() = default;

    const Mdag* graph_ = nullptr;
    std::vector<Frame> stack_;
    std::string buffer_;
    std::size_t low_water_ = 0; // shortest buffer length since the last emission
    EnumerationStats stats_;
};

/*
 * Read-side operations over a (preferably compacted) MDAG: counting,
 * lexicographic enumeration, prefix search, select and rank. Keeps a
 * reference to the graph, which must outlive this object.
 */
class MdagQuery {
public:
    explicit MdagQuery(const Mdag& g);

    const Mdag& graph() const { return *graph_; }
    const PathCountAnnotation& annotation() const { return counts_; }

    /// |MCS(X, Y)|.
    const BigInt& count() const { return counts_.paths[kSource]; }

    EnumerationStats enumerate(const EmitCallback& on_emit, EmitMode mode = EmitMode::full) const;

    /// Emits every member starting with `prefix`, in lexicographic order.
    /// Returns the number emitted (0 when nothing matches).
    std::uint64_t search_prefix(std::string_view prefix, const EmitCallback& on_emit,
                                EmitMode mode = EmitMode::full) const;

    /// The index-th smallest member, 1-based. Throws std::out_of_range.
    std::string select(const BigInt& index) const;

    /// 1-based position of s. Throws not_member_error when s is absent.
    BigInt rank(std::string_view s) const;

    /// Cursor over all members, or over those starting with `prefix` (an
    /// exhausted cursor when none do).
    EnumCursor cursor(std::string_view prefix = {}) const;

private:
    // Locates the point reached by matching `prefix` from the source:
    // target node and the label bytes still to append, or nullopt.
    std::optional<std::pair<NodeId, std::string>> descend(std::string_view prefix) const;

    const Mdag* graph_;
    PathCountAnnotation counts_;
};

} // namespace mcsdag

#endif
