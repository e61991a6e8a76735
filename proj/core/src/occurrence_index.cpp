#include "mcsdag/occurrence_index.hpp"

#include <stdexcept>
#include <string>

namespace mcsdag {

namespace {
const std::vector<Position> kNoPositions;
}

OccurrenceIndex::OccurrenceIndex() { rank_.fill(-1); }

OccurrenceIndex::OccurrenceIndex(std::string_view text) : text_(text) {
    rank_.fill(-1);
    std::array<bool, 256> seen{};
    for (char ch : text_) {
        seen[static_cast<unsigned char>(ch)] = true;
    }
    for (int c = 0; c < 256; ++c) {
        if (seen[c]) {
            rank_[c] = static_cast<std::int16_t>(alphabet_.size());
            alphabet_.push_back(static_cast<unsigned char>(c));
        }
    }

    const auto n = text_.size();
    positions_.resize(alphabet_.size());
    next_.assign(alphabet_.size() * (n + 1), kInfinity);
    for (std::size_t p = 0; p < n; ++p) {
        positions_[rank_[static_cast<unsigned char>(text_[p])]].push_back(
            static_cast<Position>(p));
    }
    // Column (from + 1) holds next(c, from); fill right to left.
    for (std::size_t r = 0; r < alphabet_.size(); ++r) {
        Position* row = next_.data() + r * (n + 1);
        for (std::size_t col = n; col-- > 0;) {
            // from = col - 1, candidate position = col
            row[col] = static_cast<unsigned char>(text_[col]) == alphabet_[r]
                           ? static_cast<Position>(col)
                           : row[col + 1];
        }
    }
}

Position OccurrenceIndex::next(unsigned char c, Position from) const {
    if (from == kInfinity) {
        return kInfinity;
    }
    if (from < kBeforeStart || from >= size()) {
        throw std::out_of_range("next(): origin " + std::to_string(from) +
                                " outside [-1, " + std::to_string(size() - 1) + "]");
    }
    const auto r = rank_[c];
    if (r < 0) {
        return kInfinity;
    }
    return next_[static_cast<std::size_t>(r) * (text_.size() + 1) +
                 static_cast<std::size_t>(from + 1)];
}

const std::vector<Position>& OccurrenceIndex::positions(unsigned char c) const {
    const auto r = rank_[c];
    return r < 0 ? kNoPositions : positions_[static_cast<std::size_t>(r)];
}

OccurrenceIndex build_index(std::string_view text) { return OccurrenceIndex(text); }

} // namespace mcsdag
