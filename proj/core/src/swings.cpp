#include "mcsdag/swings.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mcsdag {

namespace {

std::string pos_string(Position p) { return p == kInfinity ? "inf" : std::to_string(p); }

// min over characters d occurring in `from_text` strictly inside (lo, hi) of
// next_to(d, origin).
Position earliest_gap_match(const OccurrenceIndex& from_text, Position lo, Position hi,
                            const OccurrenceIndex& to_text, Position origin) {
    Position best = kInfinity;
    if (hi <= lo + 1) {
        return best;
    }
    for (unsigned char d : from_text.alphabet()) {
        if (from_text.next(d, lo) < hi) {
            best = std::min(best, to_text.next(d, origin));
        }
    }
    return best;
}

} // namespace

StringPairIndex::StringPairIndex(std::string_view x, std::string_view y) : x_(x), y_(y) {
    std::array<bool, 256> any{};
    for (unsigned char c : x_.alphabet()) {
        any[c] = true;
        if (y_.contains(c)) {
            common_.push_back(c);
        }
    }
    for (unsigned char c : y_.alphabet()) {
        any[c] = true;
    }
    sigma_ = static_cast<std::size_t>(std::count(any.begin(), any.end(), true));
}

SwingPair personal_swing(Position prev_l, Position prev_m, Position l, Position m,
                         const StringPairIndex& idx) {
    const auto& x = idx.x();
    const auto& y = idx.y();
    if (prev_l < kBeforeStart || prev_m < kBeforeStart || l <= prev_l || m <= prev_m ||
        l >= x.size() || m >= y.size() || x.text()[l] != y.text()[m]) {
        throw std::invalid_argument("personal_swing(): expected prev < (l, m) with X[l] == Y[m]");
    }
    const auto c = static_cast<unsigned char>(x.text()[l]);
    // an insertion d between the previous match and c: d inside Y(prev_m, m),
    // then c again after d in X
    const Position top = x.next(c, earliest_gap_match(y, prev_m, m, x, l));
    const Position bottom = y.next(c, earliest_gap_match(x, prev_l, l, y, m));
    return {top, bottom};
}

SwingPair base_swing(unsigned char c, Position l, Position m, const StringPairIndex& idx) {
    const Position first_x = idx.x().next(c, kBeforeStart);
    const Position first_y = idx.y().next(c, kBeforeStart);
    if (first_x == kInfinity || first_y == kInfinity) {
        throw std::invalid_argument("base_swing(): character is not common to both strings");
    }
    if (first_x != l || first_y != m) {
        throw std::invalid_argument("base_swing(): (l, m) must be the first occurrences");
    }
    return personal_swing(kBeforeStart, kBeforeStart, l, m, idx);
}

Quadruple extend_quadruple(const Quadruple& parent, unsigned char c, const StringPairIndex& idx) {
    const Position i = idx.x().next(c, parent.l);
    const Position j = idx.y().next(c, parent.m);
    if (i == kInfinity || j == kInfinity) {
        throw std::invalid_argument("extend_quadruple(): character does not occur after " +
                                    to_string(parent));
    }
    const SwingPair own = personal_swing(parent.l, parent.m, i, j, idx);
    return {i, j, std::min(own.top, idx.x().next(c, parent.t)),
            std::min(own.bottom, idx.y().next(c, parent.b))};
}

bool rectangle_test(const Quadruple& parent, Position i, Position j) {
    return i <= parent.t && j <= parent.b;
}

bool junction_test(const Quadruple& parent, Position i, Position j, const StringPairIndex& idx) {
    for (unsigned char d : idx.common_alphabet()) {
        if (idx.x().next(d, parent.l) < i && idx.y().next(d, parent.m) < j) {
            return false;
        }
    }
    return true;
}

std::vector<CandidateExtension> candidate_extensions(const Quadruple& parent,
                                                     const StringPairIndex& idx) {
    std::vector<CandidateExtension> out;
    for (unsigned char c : idx.common_alphabet()) {
        const Position i = idx.x().next(c, parent.l);
        const Position j = idx.y().next(c, parent.m);
        if (i == kInfinity || j == kInfinity) {
            continue;
        }
        out.push_back({c, i, j, extend_quadruple(parent, c, idx)});
    }
    return out;
}

// Both filters only reject when an explicit witness insertion exists:
// rectangle_test fails iff the parent prefix already admits an insertion
// inside X[0..i) x Y[0..j), and junction_test fails iff some d fits between
// the parent's end and (i, j). So no prefix of a true MCS is ever dropped.
// Prefixes that pass but never reach a terminal are removed by pruning.
std::vector<CandidateExtension> accepted_extensions(const Quadruple& parent,
                                                    const StringPairIndex& idx) {
    std::vector<CandidateExtension> out;
    for (unsigned char c : idx.common_alphabet()) {
        const Position i = idx.x().next(c, parent.l);
        const Position j = idx.y().next(c, parent.m);
        if (i == kInfinity || j == kInfinity || !rectangle_test(parent, i, j) ||
            !junction_test(parent, i, j, idx)) {
            continue;
        }
        out.push_back({c, i, j, extend_quadruple(parent, c, idx)});
    }
    return out;
}

std::string to_string(const Quadruple& q) {
    return "<" + pos_string(q.l) + "," + pos_string(q.m) + "," + pos_string(q.t) + "," +
           pos_string(q.b) + ">";
}

} // namespace mcsdag
