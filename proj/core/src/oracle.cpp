#include "mcsdag/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mcsdag::oracle {

bool is_subsequence(std::string_view s, std::string_view text) {
    std::size_t k = 0;
    for (std::size_t p = 0; p < text.size() && k < s.size(); ++p) {
        if (text[p] == s[k]) {
            ++k;
        }
    }
    return k == s.size();
}

bool is_common_subsequence(std::string_view s, std::string_view x, std::string_view y) {
    return is_subsequence(s, x) && is_subsequence(s, y);
}

MaximalityChecker::MaximalityChecker(std::string_view x, std::string_view y) {
    std::array<bool, 256> in_x{};
    std::array<bool, 256> in_y{};
    for (unsigned char c : x) in_x[c] = true;
    for (unsigned char c : y) in_y[c] = true;
    for (int c = 0; c < 256; ++c) {
        if (in_x[c] && in_y[c]) {
            common_.push_back(static_cast<unsigned char>(c));
        }
    }
    auto fill = [this](Side& side, std::string_view text) {
        side.text = std::string(text);
        side.counts.assign(common_.size(), std::vector<std::uint32_t>(text.size() + 1, 0));
        for (std::size_t r = 0; r < common_.size(); ++r) {
            auto& row = side.counts[r];
            for (std::size_t p = 0; p < text.size(); ++p) {
                row[p + 1] = row[p] + (static_cast<unsigned char>(text[p]) == common_[r] ? 1 : 0);
            }
        }
    };
    fill(x_, x);
    fill(y_, y);
}

bool MaximalityChecker::occurs_between(const Side& side, std::size_t rank, std::ptrdiff_t lo,
                                       std::ptrdiff_t hi) const {
    if (hi <= lo + 1) {
        return false;
    }
    const auto& row = side.counts[rank];
    return row[static_cast<std::size_t>(hi)] > row[static_cast<std::size_t>(lo + 1)];
}

bool MaximalityChecker::is_maximal(std::string_view s) const {
    const std::size_t k = s.size();
    // left[g]: end of leftmost embedding of s[0..g); right[g]: start of the
    // rightmost embedding of s[g..).
    auto embed = [&](const std::string& text, std::vector<std::ptrdiff_t>& left,
                     std::vector<std::ptrdiff_t>& right) {
        const auto n = static_cast<std::ptrdiff_t>(text.size());
        left.assign(k + 1, -1);
        right.assign(k + 1, n);
        std::ptrdiff_t p = -1;
        for (std::size_t g = 0; g < k; ++g) {
            do {
                ++p;
            } while (p < n && text[static_cast<std::size_t>(p)] != s[g]);
            if (p >= n) {
                return false;
            }
            left[g + 1] = p;
        }
        p = n;
        for (std::size_t g = k; g-- > 0;) {
            do {
                --p;
            } while (text[static_cast<std::size_t>(p)] != s[g]);
            right[g] = p;
        }
        return true;
    };

    std::vector<std::ptrdiff_t> lx, rx, ly, ry;
    if (!embed(x_.text, lx, rx) || !embed(y_.text, ly, ry)) {
        return false;
    }
    for (std::size_t g = 0; g <= k; ++g) {
        for (std::size_t r = 0; r < common_.size(); ++r) {
            if (occurs_between(x_, r, lx[g], rx[g]) && occurs_between(y_, r, ly[g], ry[g])) {
                return false;
            }
        }
    }
    return true;
}

bool is_maximal(std::string_view s, std::string_view x, std::string_view y) {
    return MaximalityChecker(x, y).is_maximal(s);
}

bool is_maximal_by_insertion(std::string_view s, std::string_view x, std::string_view y) {
    if (!is_common_subsequence(s, x, y)) {
        return false;
    }
    std::array<bool, 256> in_x{};
    for (unsigned char c : x) in_x[c] = true;
    std::string candidate;
    for (std::size_t g = 0; g <= s.size(); ++g) {
        for (int c = 0; c < 256; ++c) {
            if (!in_x[c]) {
                continue;
            }
            candidate.assign(s.substr(0, g));
            candidate.push_back(static_cast<char>(c));
            candidate.append(s.substr(g));
            if (is_common_subsequence(candidate, x, y)) {
                return false;
            }
        }
    }
    return true;
}

PrefixTrie::PrefixTrie() : nodes_(1) {}

void PrefixTrie::insert(std::string_view s) {
    std::size_t at = kRoot;
    for (unsigned char c : s) {
        auto it = nodes_[at].children.find(c);
        if (it == nodes_[at].children.end()) {
            nodes_.emplace_back();
            it = nodes_[at].children.emplace(c, nodes_.size() - 1).first;
        }
        at = it->second;
    }
    nodes_[at].terminal = true;
}

std::size_t PrefixTrie::find(std::string_view prefix) const {
    std::size_t at = kRoot;
    for (unsigned char c : prefix) {
        auto it = nodes_[at].children.find(c);
        if (it == nodes_[at].children.end()) {
            return nodes_.size();
        }
        at = it->second;
    }
    return at;
}

std::size_t PrefixTrie::path_count() const {
    // children always have larger indices than their parent
    std::vector<std::size_t> paths(nodes_.size(), 0);
    for (std::size_t v = nodes_.size(); v-- > 0;) {
        paths[v] = nodes_[v].terminal ? 1 : 0;
        for (const auto& [c, child] : nodes_[v].children) {
            paths[v] += paths[child];
        }
    }
    return paths[kRoot];
}

std::vector<std::string> PrefixTrie::spell() const {
    std::vector<std::string> out;
    std::string buffer;
    auto walk = [&](auto&& self, std::size_t v) -> void {
        for (const auto& [c, child] : nodes_[v].children) {
            buffer.push_back(static_cast<char>(c));
            self(self, child);
            buffer.pop_back();
        }
        if (nodes_[v].terminal) {
            out.push_back(buffer);
        }
    };
    walk(walk, kRoot);
    std::sort(out.begin(), out.end());
    return out;
}

OracleSet brute_force_mcs(std::string_view x, std::string_view y) {
    if (x.size() > kMaxBruteForceLength) {
        throw std::length_error("brute_force_mcs(): |X| = " + std::to_string(x.size()) +
                                " exceeds the oracle cap of " +
                                std::to_string(kMaxBruteForceLength));
    }
    std::unordered_set<std::string> common;
    const std::uint32_t limit = 1u << x.size();
    std::string sub;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        sub.clear();
        for (std::size_t p = 0; p < x.size(); ++p) {
            if (mask & (1u << p)) {
                sub.push_back(x[p]);
            }
        }
        if (!common.contains(sub) && is_subsequence(sub, y)) {
            common.insert(sub);
        }
    }

    OracleSet result;
    for (const auto& s : common) {
        if (is_maximal_by_insertion(s, x, y)) {
            result.strings.push_back(s);
        }
    }
    std::sort(result.strings.begin(), result.strings.end());
    for (const auto& s : result.strings) {
        result.trie.insert(s);
    }
    return result;
}

Quadruple definitional_swings(std::string_view p, std::string_view x, std::string_view y) {
    auto leftmost_end = [&](std::string_view text) -> Position {
        Position at = kBeforeStart;
        for (char c : p) {
            do {
                ++at;
            } while (static_cast<std::size_t>(at) < text.size() &&
                     text[static_cast<std::size_t>(at)] != c);
            if (static_cast<std::size_t>(at) >= text.size()) {
                throw std::invalid_argument("definitional_swings(): prefix is not a common "
                                            "subsequence");
            }
        }
        return at;
    };
    Quadruple q;
    q.l = leftmost_end(x);
    q.m = leftmost_end(y);

    const auto y_fixed = y.substr(0, static_cast<std::size_t>(q.m + 1));
    for (Position i = q.l + 1; i < static_cast<Position>(x.size()); ++i) {
        if (!is_maximal(p, x.substr(0, static_cast<std::size_t>(i + 1)), y_fixed)) {
            q.t = i;
            break;
        }
    }
    const auto x_fixed = x.substr(0, static_cast<std::size_t>(q.l + 1));
    for (Position j = q.m + 1; j < static_cast<Position>(y.size()); ++j) {
        if (!is_maximal(p, x_fixed, y.substr(0, static_cast<std::size_t>(j + 1)))) {
            q.b = j;
            break;
        }
    }
    return q;
}

} // namespace mcsdag::oracle
