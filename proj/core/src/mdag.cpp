#include "mcsdag/mdag.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mcsdag {

namespace {

unsigned char first_byte(const MdagEdge& e) { return static_cast<unsigned char>(e.label.front()); }

std::string node_name(NodeId v) { return "node " + std::to_string(v); }

} // namespace

Mdag::Mdag() {
    nodes_.push_back({kSourceQuadruple, {}});
    nodes_.push_back({kSinkQuadruple, {}});
}

NodeId Mdag::add_node(const Quadruple& key) {
    if (nodes_.size() >= std::numeric_limits<NodeId>::max()) {
        throw std::length_error("Mdag: node id space exhausted");
    }
    nodes_.push_back({key, {}});
    return static_cast<NodeId>(nodes_.size() - 1);
}

void Mdag::add_edge(NodeId from, NodeId to, std::string label) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
        throw invariant_error("add_edge(): unknown node id");
    }
    if (from == kSink) {
        throw invariant_error("add_edge(): the sink has no out-edges");
    }
    if (label.empty()) {
        throw invariant_error("add_edge(): empty label");
    }
    if (to == kSink && label.back() != kTerminator) {
        throw invariant_error("add_edge(): labels into the sink must end with '$'");
    }
    auto& out = nodes_[from].out;
    const auto c = static_cast<unsigned char>(label.front());
    auto it = std::lower_bound(out.begin(), out.end(), c,
                               [](const MdagEdge& e, unsigned char v) { return first_byte(e) < v; });
    if (it != out.end() && first_byte(*it) == c) {
        throw invariant_error("add_edge(): " + node_name(from) +
                              " already has an out-edge starting with '" + std::string(1, label.front()) +
                              "'");
    }
    out.insert(it, MdagEdge{to, std::move(label)});
    ++edge_count_;
}

std::vector<NodeId> topological_order(const Mdag& g) {
    const auto n = g.node_count();
    std::vector<std::uint32_t> indegree(n, 0);
    for (const auto& node : g.nodes()) {
        for (const auto& e : node.out) {
            ++indegree[e.target];
        }
    }
    std::vector<NodeId> order;
    order.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const auto& e : g.node(order[head]).out) {
            if (--indegree[e.target] == 0) {
                order.push_back(e.target);
            }
        }
    }
    return order;
}

void validate(const Mdag& g) {
    const auto n = g.node_count();
    if (n < 2) {
        throw invariant_error("validate(): missing source or sink");
    }
    if (g.node(kSource).key != kSourceQuadruple) {
        throw invariant_error("validate(): source must carry " + to_string(kSourceQuadruple));
    }
    if (g.node(kSink).key != kSinkQuadruple) {
        throw invariant_error("validate(): sink must carry " + to_string(kSinkQuadruple));
    }
    if (!g.node(kSink).out.empty()) {
        throw invariant_error("validate(): sink has out-edges");
    }

    std::vector<std::uint32_t> indegree(n, 0);
    std::size_t edges = 0;
    for (NodeId v = 0; v < n; ++v) {
        const auto& out = g.node(v).out;
        if (v != kSink && out.empty()) {
            throw invariant_error("validate(): " + node_name(v) + " has no out-edges");
        }
        if (g.flags().compacted && v != kSource && v != kSink && out.size() < 2) {
            throw invariant_error("validate(): compacted " + node_name(v) + " is unary");
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
            const auto& e = out[k];
            if (e.target >= n) {
                throw invariant_error("validate(): edge to unknown node");
            }
            if (e.label.empty()) {
                throw invariant_error("validate(): empty label on " + node_name(v));
            }
            if (k > 0 && first_byte(out[k - 1]) >= first_byte(e)) {
                throw invariant_error("validate(): out-edges of " + node_name(v) +
                                      " not strictly ordered by first byte");
            }
            if (e.target == kSink) {
                if (e.label.back() != kTerminator) {
                    throw invariant_error("validate(): label into the sink lacks '$'");
                }
                if (e.label.size() == 1 && out.size() != 1) {
                    throw invariant_error("validate(): " + node_name(v) +
                                          " both ends a string and extends it");
                }
            }
            if (!g.flags().compacted && e.label.size() != 1) {
                throw invariant_error("validate(): uncompacted graph carries multi-byte label");
            }
            ++indegree[e.target];
            ++edges;
        }
    }
    if (edges != g.edge_count()) {
        throw invariant_error("validate(): edge count mismatch");
    }
    for (NodeId v = 1; v < n; ++v) {
        if (indegree[v] == 0) {
            throw invariant_error("validate(): " + node_name(v) + " is unreachable");
        }
    }
    if (indegree[kSource] != 0) {
        throw invariant_error("validate(): source has incoming edges");
    }
    // With one zero-indegree node and one zero-outdegree node, acyclicity
    // means every node lies on a source-to-sink path.
    if (topological_order(g).size() != n) {
        throw invariant_error("validate(): graph has a cycle");
    }

    std::map<Quadruple, NodeId> seen;
    for (NodeId v = 2; v < n; ++v) {
        auto [it, fresh] = seen.emplace(g.node(v).key, v);
        if (!fresh) {
            throw invariant_error("validate(): nodes " + std::to_string(it->second) + " and " +
                                  std::to_string(v) + " share " + to_string(g.node(v).key));
        }
    }
}

Mdag canonicalize(const Mdag& g) {
    constexpr NodeId kUnassigned = std::numeric_limits<NodeId>::max();
    const auto n = g.node_count();

    // iterative DFS, postorder
    std::vector<NodeId> postorder;
    std::vector<char> visited(n, 0);
    std::vector<std::pair<NodeId, std::size_t>> stack{{kSource, 0}};
    visited[kSource] = 1;
    while (!stack.empty()) {
        auto& [v, next_edge] = stack.back();
        const auto& out = g.node(v).out;
        if (next_edge < out.size()) {
            const NodeId w = out[next_edge++].target;
            if (!visited[w]) {
                visited[w] = 1;
                stack.emplace_back(w, 0);
            }
        } else {
            postorder.push_back(v);
            stack.pop_back();
        }
    }

    std::vector<NodeId> remap(n, kUnassigned);
    remap[kSource] = kSource;
    remap[kSink] = kSink;
    NodeId next_id = 2;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
        if (*it != kSource && *it != kSink) {
            remap[*it] = next_id++;
        }
    }

    std::vector<NodeId> by_new_id(next_id, kUnassigned);
    for (NodeId v = 0; v < n; ++v) {
        if (remap[v] != kUnassigned) {
            by_new_id[remap[v]] = v;
        }
    }

    Mdag out;
    out.x_length = g.x_length;
    out.y_length = g.y_length;
    out.sigma = g.sigma;
    out.flags() = g.flags();
    for (NodeId id = 2; id < next_id; ++id) {
        out.add_node(g.node(by_new_id[id]).key);
    }
    for (NodeId id = 0; id < next_id; ++id) {
        for (const auto& e : g.node(by_new_id[id]).out) {
            out.add_edge(id, remap[e.target], e.label);
        }
    }
    return out;
}

std::vector<std::string> spell_all(const Mdag& g) {
    std::vector<std::string> out;
    std::string buffer;
    auto walk = [&](auto&& self, NodeId v) -> void {
        if (v == kSink) {
            out.push_back(buffer);
            return;
        }
        for (const auto& e : g.node(v).out) {
            const auto keep = buffer.size();
            buffer.append(Mdag::spelled(e));
            self(self, e.target);
            buffer.resize(keep);
        }
    };
    walk(walk, kSource);
    return out;
}

} // namespace mcsdag
