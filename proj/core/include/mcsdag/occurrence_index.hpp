#ifndef MCSDAG_OCCURRENCE_INDEX_HPP
#define MCSDAG_OCCURRENCE_INDEX_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace mcsdag {

/// A 0-based position inside one of the input strings.
using Position = std::int32_t;

/// The virtual position just before the first character.
inline constexpr Position kBeforeStart = -1;

/// Absorbing "no such position" value. Compares greater than every real
/// position, so min() and next() stay total over it.
inline constexpr Position kInfinity = std::numeric_limits<Position>::max();

/*
 * Next-occurrence index over a single byte string.
 *
 * Keeps a dense successor table with one row per distinct character and
 * one column per query origin (-1 .. n-1), so next(c, i) is a single load.
 * Space and construction time are O(sigma * n).
 *
 * Example, text "TCACAG":
 *   next('C', 1)  == 3
 *   next('T', 0)  == kInfinity
 *   next('A', -1) == 2
 */
class OccurrenceIndex {
public:
    OccurrenceIndex();
    explicit OccurrenceIndex(std::string_view text);

    /// Smallest p > from with text[p] == c, or kInfinity. `from` must be -1,
    /// a valid position, or kInfinity; anything else throws std::out_of_range.
    Position next(unsigned char c, Position from) const;

    bool contains(unsigned char c) const { return rank_[c] >= 0; }

    std::string_view text() const { return text_; }
    Position size() const { return static_cast<Position>(text_.size()); }

    /// Distinct characters of the text, increasing byte order.
    const std::vector<unsigned char>& alphabet() const { return alphabet_; }

    /// Sorted occurrence list of c (empty when c does not occur).
    const std::vector<Position>& positions(unsigned char c) const;

private:
    std::string text_;
    std::array<std::int16_t, 256> rank_;
    std::vector<unsigned char> alphabet_;
    std::vector<std::vector<Position>> positions_;
    // row-major: next_[rank * (n + 1) + (from + 1)]
    std::vector<Position> next_;
};

OccurrenceIndex build_index(std::string_view text);

} // namespace mcsdag

#endif
