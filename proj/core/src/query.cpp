#include "mcsdag/query.hpp"

#include <algorithm>

namespace mcsdag {

namespace {

// Out-edge of v whose spelled part starts with c, or nullptr.
const MdagEdge* edge_starting_with(const MdagNode& v, char c, std::size_t* ordinal) {
    const auto key = static_cast<unsigned char>(c);
    auto it = std::lower_bound(v.out.begin(), v.out.end(), key,
                               [](const MdagEdge& e, unsigned char k) {
                                   return static_cast<unsigned char>(e.label.front()) < k;
                               });
    if (it == v.out.end() || static_cast<unsigned char>(it->label.front()) != key ||
        Mdag::spelled(*it).empty()) {
        return nullptr;
    }
    if (ordinal != nullptr) {
        *ordinal = static_cast<std::size_t>(it - v.out.begin());
    }
    return &*it;
}

} // namespace

not_member_error::not_member_error(Reason reason, std::size_t offset)
    : std::runtime_error(std::string("not a member: ") + to_string(reason) + " at offset " +
                         std::to_string(offset)),
      reason_(reason), offset_(offset) {}

const char* to_string(not_member_error::Reason reason) {
    using R = not_member_error::Reason;
    switch (reason) {
    case R::no_matching_edge: return "no matching edge";
    case R::label_mismatch: return "mismatch inside an edge label";
    case R::ended_mid_edge: return "string ends inside an edge label";
    case R::ended_at_inner_node: return "string ends at a non-terminal node";
    case R::overran_terminal: return "string continues past a member";
    }
    return "unknown";
}

PathCountAnnotation annotate_counts(const Mdag& g) {
    PathCountAnnotation a;
    a.paths.assign(g.node_count(), 0);
    a.edge_offsets.resize(g.node_count());
    a.paths[kSink] = 1;
    const auto order = topological_order(g);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& out = g.node(*it).out;
        if (out.empty()) {
            continue;
        }
        auto& offsets = a.edge_offsets[*it];
        offsets.reserve(out.size());
        BigInt running = 0;
        for (const auto& e : out) {
            offsets.push_back(running);
            running += a.paths[e.target];
        }
        a.paths[*it] = std::move(running);
    }
    return a;
}

EnumCursor::EnumCursor(const Mdag& g, NodeId start, std::string prefix)
    : graph_(&g), buffer_(std::move(prefix)) {
    stack_.push_back({start, 0, buffer_.size()});
    stats_.frames = 1;
}

std::optional<Emission> EnumCursor::next() {
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.node == kSink) {
            const std::size_t length = top.length;
            stack_.pop_back();
            std::string_view text(buffer_.data(), length);
            Emission em{text, low_water_, text.substr(low_water_)};
            low_water_ = length;
            ++stats_.solutions;
            return em;
        }
        const auto& out = graph_->node(top.node).out;
        if (top.next_edge == out.size()) {
            stack_.pop_back();
            continue;
        }
        const MdagEdge& e = out[top.next_edge++];
        const std::size_t length = top.length;
        low_water_ = std::min(low_water_, length);
        buffer_.resize(length);
        buffer_.append(Mdag::spelled(e));
        stack_.push_back({e.target, 0, buffer_.size()});
        ++stats_.frames;
    }
    return std::nullopt;
}

MdagQuery::MdagQuery(const Mdag& g) : graph_(&g), counts_(annotate_counts(g)) {}

EnumCursor MdagQuery::cursor(std::string_view prefix) const {
    auto found = descend(prefix);
    if (!found) {
        return EnumCursor();
    }
    std::string start(prefix);
    start += found->second;
    return EnumCursor(*graph_, found->first, std::move(start));
}

namespace {

std::uint64_t drain(EnumCursor& cursor, const EmitCallback& on_emit, EmitMode mode,
                    bool* stopped) {
    std::uint64_t emitted = 0;
    while (auto em = cursor.next()) {
        if (mode == EmitMode::full) {
            em->keep = 0;
            em->suffix = em->text;
        }
        ++emitted;
        if (!on_emit(*em)) {
            *stopped = true;
            break;
        }
    }
    return emitted;
}

} // namespace

EnumerationStats MdagQuery::enumerate(const EmitCallback& on_emit, EmitMode mode) const {
    EnumCursor c = cursor();
    bool stopped = false;
    drain(c, on_emit, mode, &stopped);
    EnumerationStats s = c.stats();
    s.stopped_early = stopped;
    return s;
}

std::uint64_t MdagQuery::search_prefix(std::string_view prefix, const EmitCallback& on_emit,
                                       EmitMode mode) const {
    EnumCursor c = cursor(prefix);
    bool stopped = false;
    return drain(c, on_emit, mode, &stopped);
}

std::optional<std::pair<NodeId, std::string>> MdagQuery::descend(std::string_view prefix) const {
    NodeId u = kSource;
    std::size_t pos = 0;
    while (pos < prefix.size()) {
        if (u == kSink) {
            return std::nullopt;
        }
        const MdagEdge* e = edge_starting_with(graph_->node(u), prefix[pos], nullptr);
        if (e == nullptr) {
            return std::nullopt;
        }
        const std::string_view label = Mdag::spelled(*e);
        const std::size_t k = std::min(label.size(), prefix.size() - pos);
        if (label.substr(0, k) != prefix.substr(pos, k)) {
            return std::nullopt;
        }
        if (k < label.size()) {
            return std::pair{e->target, std::string(label.substr(k))};
        }
        pos += k;
        u = e->target;
    }
    return std::pair{u, std::string()};
}

std::string MdagQuery::select(const BigInt& index) const {
    if (index < 1 || index > count()) {
        throw std::out_of_range("select(): index " + index.str() + " outside [1, " +
                                count().str() + "]");
    }
    BigInt remaining = index;
    std::string out;
    NodeId u = kSource;
    while (u != kSink) {
        const auto& offsets = counts_.edge_offsets[u];
        // last edge whose offset is below `remaining`
        const auto k = static_cast<std::size_t>(
            std::lower_bound(offsets.begin(), offsets.end(), remaining) - offsets.begin() - 1);
        remaining -= offsets[k];
        const MdagEdge& e = graph_->node(u).out[k];
        out.append(Mdag::spelled(e));
        u = e.target;
    }
    return out;
}

BigInt MdagQuery::rank(std::string_view s) const {
    using Reason = not_member_error::Reason;
    BigInt below = 0;
    NodeId u = kSource;
    std::size_t pos = 0;
    while (u != kSink) {
        const auto& node = graph_->node(u);
        if (pos == s.size()) {
            // only a bare terminator edge completes the string here
            const auto& only = node.out.front();
            if (node.out.size() == 1 && only.target == kSink && Mdag::spelled(only).empty()) {
                u = kSink;
                continue;
            }
            throw not_member_error(Reason::ended_at_inner_node, pos);
        }
        std::size_t k = 0;
        const MdagEdge* e = edge_starting_with(node, s[pos], &k);
        if (e == nullptr) {
            throw not_member_error(Reason::no_matching_edge, pos);
        }
        below += counts_.edge_offsets[u][k];
        const std::string_view label = Mdag::spelled(*e);
        for (std::size_t q = 0; q < label.size(); ++q) {
            if (pos + q == s.size()) {
                throw not_member_error(Reason::ended_mid_edge, pos + q);
            }
            if (s[pos + q] != label[q]) {
                throw not_member_error(Reason::label_mismatch, pos + q);
            }
        }
        pos += label.size();
        u = e->target;
    }
    if (pos != s.size()) {
        throw not_member_error(Reason::overran_terminal, pos);
    }
    return below + 1;
}

} // namespace mcsdag
