#include "mcsdag/builder.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

namespace mcsdag {

std::pair<NodeId, bool> QuadrupleMemo::lookup_or_insert(const Quadruple& q, NodeId fresh) {
    auto& bucket = buckets_[bucket_key(q)];
    auto [it, inserted] = bucket.emplace(std::pair{q.t, q.b}, fresh);
    if (inserted) {
        ++size_;
    }
    return {it->second, !inserted};
}

std::optional<NodeId> QuadrupleMemo::find(const Quadruple& q) const {
    auto b = buckets_.find(bucket_key(q));
    if (b == buckets_.end()) {
        return std::nullopt;
    }
    auto it = b->second.find({q.t, q.b});
    if (it == b->second.end()) {
        return std::nullopt;
    }
    return it->second;
}

Mdag expand_mdag(std::string_view x, std::string_view y, const BuildLimits& limits) {
    const StringPairIndex idx(x, y);
    Mdag g;
    g.x_length = static_cast<std::uint32_t>(x.size());
    g.y_length = static_cast<std::uint32_t>(y.size());
    g.sigma = static_cast<std::uint32_t>(idx.sigma());

    QuadrupleMemo memo;
    memo.lookup_or_insert(kSourceQuadruple, kSource);

    std::vector<NodeId> pending{kSource};
    while (!pending.empty()) {
        const NodeId u = pending.back();
        pending.pop_back();
        const Quadruple key = g.node(u).key;

        const auto extensions = accepted_extensions(key, idx);
        if (is_terminal(key, !extensions.empty())) {
            g.add_edge(u, kSink, std::string(1, kTerminator));
            continue;
        }
        for (const auto& ext : extensions) {
            const auto fresh = static_cast<NodeId>(g.node_count());
            auto [v, present] = memo.lookup_or_insert(ext.child, fresh);
            if (!present) {
                if (limits.max_nodes != 0 && g.node_count() >= limits.max_nodes) {
                    throw resource_limit_error("expand_mdag(): node limit of " +
                                               std::to_string(limits.max_nodes) + " reached");
                }
                g.add_node(ext.child);
                pending.push_back(v);
            }
            g.add_edge(u, v, std::string(1, static_cast<char>(ext.c)));
        }
    }
    g.flags().built = true;
    return g;
}

Mdag prune_mdag(const Mdag& g) {
    const auto n = g.node_count();
    std::vector<std::vector<NodeId>> incoming(n);
    for (NodeId v = 0; v < n; ++v) {
        for (const auto& e : g.node(v).out) {
            incoming[e.target].push_back(v);
        }
    }
    std::vector<char> alive(n, 0);
    std::vector<NodeId> queue{kSink};
    alive[kSink] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (NodeId u : incoming[queue[head]]) {
            if (!alive[u]) {
                alive[u] = 1;
                queue.push_back(u);
            }
        }
    }
    if (!alive[kSource]) {
        throw invariant_error("prune_mdag(): the source cannot reach the sink");
    }

    Mdag kept;
    kept.x_length = g.x_length;
    kept.y_length = g.y_length;
    kept.sigma = g.sigma;
    std::vector<NodeId> remap(n, 0);
    remap[kSource] = kSource;
    remap[kSink] = kSink;
    for (NodeId v = 2; v < n; ++v) {
        if (alive[v]) {
            remap[v] = kept.add_node(g.node(v).key);
        }
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!alive[v]) {
            continue;
        }
        for (const auto& e : g.node(v).out) {
            if (alive[e.target]) {
                kept.add_edge(remap[v], remap[e.target], e.label);
            }
        }
    }
    kept.flags() = g.flags();
    kept.flags().pruned = true;
    return canonicalize(kept);
}

Mdag build_mdag(std::string_view x, std::string_view y, const BuildLimits& limits) {
    return prune_mdag(expand_mdag(x, y, limits));
}

Mdag compact_mdag(const Mdag& g) {
    if (!g.flags().pruned) {
        throw invariant_error("compact_mdag(): graph must be pruned first");
    }
    const auto n = g.node_count();
    auto is_unary = [&](NodeId v) {
        return v != kSource && v != kSink && g.node(v).out.size() == 1;
    };

    Mdag out;
    out.x_length = g.x_length;
    out.y_length = g.y_length;
    out.sigma = g.sigma;
    std::vector<NodeId> remap(n, 0);
    remap[kSource] = kSource;
    remap[kSink] = kSink;
    for (NodeId v = 2; v < n; ++v) {
        if (!is_unary(v)) {
            remap[v] = out.add_node(g.node(v).key);
        }
    }
    for (NodeId u = 0; u < n; ++u) {
        if (u == kSink || is_unary(u)) {
            continue;
        }
        for (const auto& e : g.node(u).out) {
            std::string label = e.label;
            NodeId w = e.target;
            while (is_unary(w)) {
                const auto& only = g.node(w).out.front();
                label += only.label;
                w = only.target;
            }
            out.add_edge(remap[u], remap[w], std::move(label));
        }
    }
    out.flags() = g.flags();
    out.flags().compacted = true;
    return canonicalize(out);
}

MdagStats stats(const Mdag& g) {
    MdagStats s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();

    std::map<std::pair<Position, Position>, std::vector<std::pair<Position, Position>>> buckets;
    for (NodeId v = 2; v < g.node_count(); ++v) {
        const auto& q = g.node(v).key;
        buckets[{q.l, q.m}].emplace_back(q.t, q.b);
    }
    for (const auto& node : g.nodes()) {
        s.max_out_degree = std::max(s.max_out_degree, node.out.size());
    }

    std::vector<std::size_t> longest(g.node_count(), 0);
    const auto order = topological_order(g);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (const auto& e : g.node(*it).out) {
            longest[*it] = std::max(longest[*it], longest[e.target] + 1);
        }
    }
    s.depth = longest[kSource];

    const std::size_t n = std::max(g.x_length, g.y_length);
    s.distinct_lm = buckets.size();
    for (auto& [lm, swings] : buckets) {
        s.max_lm_multiplicity = std::max(s.max_lm_multiplicity, swings.size());
        if (swings.size() >= 2 * n) {
            ++s.pareto_violations;
        }
        for (std::size_t a = 0; a < swings.size(); ++a) {
            for (std::size_t b = a + 1; b < swings.size(); ++b) {
                const auto [ta, ba] = swings[a];
                const auto [tb, bb] = swings[b];
                if ((ta > tb && ba > bb) || (tb > ta && bb > ba)) {
                    ++s.antichain_violations;
                }
            }
        }
    }
    return s;
}

MonotonicityReport check_monotonicity(const Mdag& g) {
    struct Step {
        Quadruple parent;
        Quadruple child;
    };
    std::map<std::tuple<unsigned char, Position, Position>, std::vector<Step>> groups;
    for (const auto& node : g.nodes()) {
        for (const auto& e : node.out) {
            if (e.target == kSink) {
                continue;
            }
            const auto& child = g.node(e.target).key;
            groups[{static_cast<unsigned char>(e.label.front()), child.l, child.m}].push_back(
                {node.key, child});
        }
    }
    MonotonicityReport report;
    auto tally = [&](Position p, Position p2, Position c, Position c2) {
        report.forward += p < p2 && c > c2;
        report.reverse += c < c2 && !(p < p2);
    };
    for (const auto& [key, steps] : groups) {
        for (const auto& a : steps) {
            for (const auto& b : steps) {
                if (a.parent.l == b.parent.l && a.parent.m == b.parent.m) {
                    continue;
                }
                tally(a.parent.t, b.parent.t, a.child.t, b.child.t);
                tally(a.parent.b, b.parent.b, a.child.b, b.child.b);
            }
        }
    }
    return report;
}

} // namespace mcsdag
