#ifndef MCSDAG_ORACLE_HPP
#define MCSDAG_ORACLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcsdag/swings.hpp"

// Exponential-time reference implementations. Nothing in here touches the
// occurrence index or the swing algebra, so the builder can be checked
// against it.
namespace mcsdag::oracle {

/// Largest |X| accepted by brute_force_mcs (2^|X| subsequences).
inline constexpr std::size_t kMaxBruteForceLength = 15;

bool is_subsequence(std::string_view s, std::string_view text);

bool is_common_subsequence(std::string_view s, std::string_view x, std::string_view y);

/*
 * Maximality by gap analysis: for every gap g of s, take the leftmost
 * embedding of s[0..g) and the rightmost embedding of s[g..) in each string;
 * an insertion at g exists iff some character occurs strictly between them in
 * both X and Y. Builds prefix counts once, then O(n + |s| * sigma) per query.
 */
class MaximalityChecker {
public:
    MaximalityChecker(std::string_view x, std::string_view y);

    /// False when s is not a common subsequence.
    bool is_maximal(std::string_view s) const;

private:
    struct Side {
        std::string text;
        // counts[c][p] = occurrences of alphabet[c] in text[0..p)
        std::vector<std::vector<std::uint32_t>> counts;
    };
    bool occurs_between(const Side& side, std::size_t rank, std::ptrdiff_t lo,
                        std::ptrdiff_t hi) const;

    Side x_;
    Side y_;
    std::vector<unsigned char> common_;
};

/// One-shot MaximalityChecker.
bool is_maximal(std::string_view s, std::string_view x, std::string_view y);

/// Literal definition: no single-character insertion into any gap of s gives
/// a common subsequence. O(|s| * sigma * n).
bool is_maximal_by_insertion(std::string_view s, std::string_view x, std::string_view y);

/*
 * Prefix tree of a string set, with every complete string joined to one
 * shared sink by a terminator edge. At desk scale this is the (exponential)
 * DAG whose st-paths spell the MCS set.
 */
class PrefixTrie {
public:
    static constexpr std::size_t kRoot = 0;

    struct Node {
        std::map<unsigned char, std::size_t> children;
        bool terminal = false;
    };

    PrefixTrie();

    void insert(std::string_view s);

    const std::vector<Node>& nodes() const { return nodes_; }

    /// Node spelling `prefix`, or nodes().size() when absent.
    std::size_t find(std::string_view prefix) const;

    /// Number of root-to-sink paths.
    std::size_t path_count() const;

    /// Strings spelled by root-to-sink paths, lexicographic order.
    std::vector<std::string> spell() const;

private:
    std::vector<Node> nodes_;
};

struct OracleSet {
    std::vector<std::string> strings; // sorted, distinct
    PrefixTrie trie;
};

/// All maximal common subsequences of x and y. Throws std::length_error when
/// |x| > kMaxBruteForceLength.
OracleSet brute_force_mcs(std::string_view x, std::string_view y);

/// (l, m, t, b) of prefix p evaluated straight from the definitions: l, m by
/// greedy leftmost embedding, and
///   t = min{ i > l : p not in MCS(X[0..i], Y[0..m]) },
///   b = min{ j > m : p not in MCS(X[0..l], Y[0..j]) },
/// kInfinity for an empty set. Throws std::invalid_argument if p is not a
/// common subsequence.
Quadruple definitional_swings(std::string_view p, std::string_view x, std::string_view y);

} // namespace mcsdag::oracle

#endif
