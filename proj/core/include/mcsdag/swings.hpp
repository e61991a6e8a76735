#ifndef MCSDAG_SWINGS_HPP
#define MCSDAG_SWINGS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mcsdag/occurrence_index.hpp"

namespace mcsdag {

/*
 * Identity of an MDAG node: <l, m, t, b>.
 *
 * (l, m) are the ends of the shortest prefixes X[0..l], Y[0..m] that embed
 * the represented prefix string; (t, b) are its top and bottom swings, i.e.
 * the smallest horizons in X (Y fixed at m), resp. Y (X fixed at l), at which
 * the prefix stops being a maximal common subsequence. Swings are kInfinity
 * when that never happens.
 *
 * Ordering is lexicographic on (l, m, t, b).
 */
struct Quadruple {
    Position l = kBeforeStart;
    Position m = kBeforeStart;
    Position t = kInfinity;
    Position b = kInfinity;

    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

inline constexpr Quadruple kSourceQuadruple{kBeforeStart, kBeforeStart, kInfinity, kInfinity};

struct SwingPair {
    Position top = kInfinity;
    Position bottom = kInfinity;

    friend bool operator==(const SwingPair&, const SwingPair&) = default;
};

/// Appending character `c`, matched at X[i] and Y[j], to a prefix.
struct CandidateExtension {
    unsigned char c = 0;
    Position i = kInfinity;
    Position j = kInfinity;
    Quadruple child;
};

/// Occurrence indexes for the two input strings plus their common alphabet.
class StringPairIndex {
public:
    StringPairIndex(std::string_view x, std::string_view y);

    const OccurrenceIndex& x() const { return x_; }
    const OccurrenceIndex& y() const { return y_; }

    /// Characters occurring in both strings, increasing byte order.
    const std::vector<unsigned char>& common_alphabet() const { return common_; }

    /// Number of distinct bytes occurring in X or Y.
    std::size_t sigma() const { return sigma_; }

private:
    OccurrenceIndex x_;
    OccurrenceIndex y_;
    std::vector<unsigned char> common_;
    std::size_t sigma_ = 0;
};

/// Swings of the one-character prefix `c`, matched at its first occurrences
/// l in X and m in Y. Throws std::invalid_argument if c is not common or
/// (l, m) are not its first occurrences.
SwingPair base_swing(unsigned char c, Position l, Position m, const StringPairIndex& idx);

/// Swing contribution of the newest character matched at (l, m), seen over
/// the suffixes after (prev_l, prev_m):
///   top    = next_X(X[l], min{ next_X(d, l) : d occurs in Y(prev_m, m) })
///   bottom = next_Y(Y[m], min{ next_Y(d, m) : d occurs in X(prev_l, l) })
/// with min over the empty set = kInfinity.
SwingPair personal_swing(Position prev_l, Position prev_m, Position l, Position m,
                         const StringPairIndex& idx);

/// Quadruple of the prefix extended by `c`: leftmost positions after the
/// parent's, swings = min(personal swing, next occurrence of c after the
/// parent's swing). Throws std::invalid_argument if c does not occur after
/// the parent's positions in both strings.
Quadruple extend_quadruple(const Quadruple& parent, unsigned char c, const StringPairIndex& idx);

/// i <= t and j <= b: the parent prefix survives the horizons needed to
/// reach the new match.
bool rectangle_test(const Quadruple& parent, Position i, Position j);

/// No character fits strictly between the parent's end and (i, j) in both
/// strings at once.
bool junction_test(const Quadruple& parent, Position i, Position j, const StringPairIndex& idx);

/// Every common character after (l, m), paired with its first occurrences
/// and child quadruple, increasing byte order.
std::vector<CandidateExtension> candidate_extensions(const Quadruple& parent,
                                                     const StringPairIndex& idx);

/// Candidates passing both rectangle_test and junction_test.
std::vector<CandidateExtension> accepted_extensions(const Quadruple& parent,
                                                    const StringPairIndex& idx);

/// A prefix ends an MCS when nothing extends it and both swings are open.
inline bool is_terminal(const Quadruple& q, bool has_accepted_extension) {
    return !has_accepted_extension && q.t == kInfinity && q.b == kInfinity;
}

std::string to_string(const Quadruple& q);

} // namespace mcsdag

#endif
