#include "mcsdag/mdag_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include <boost/crc.hpp>

namespace mcsdag {

namespace {

constexpr std::uint32_t kFlagBuilt = 1u << 0;
constexpr std::uint32_t kFlagPruned = 1u << 1;
constexpr std::uint32_t kFlagCompacted = 1u << 2;
constexpr std::uint32_t kFlagVerified = 1u << 3;
constexpr std::size_t kChecksumSize = 4;

std::uint32_t crc32(std::string_view bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) {
        out.push_back(static_cast<char>((v >> (8 * k)) & 0xFFu));
    }
}

void put_position(std::string& out, Position p) {
    put_u32(out, static_cast<std::uint32_t>(p == kInfinity ? kEncodedInfinity : p));
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int k = 0; k < 4; ++k) {
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_ + k])) << (8 * k);
        }
        pos_ += 4;
        return v;
    }

    Position position() {
        const auto raw = static_cast<std::int32_t>(u32());
        if (raw == kEncodedInfinity) {
            return kInfinity;
        }
        if (raw < kBeforeStart) {
            throw load_error(load_error::Kind::corrupt, "load(): invalid position " + std::to_string(raw));
        }
        return raw;
    }

    std::string_view take(std::size_t n) {
        need(n);
        auto s = bytes_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (bytes_.size() - pos_ < n) {
            throw load_error(load_error::Kind::corrupt, "load(): file is truncated");
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

void check_key_range(const Quadruple& q, const Mdag& g, NodeId id) {
    auto fail = [&] {
        throw load_error(load_error::Kind::invariant_violation,
                         "load(): node " + std::to_string(id) + " has out-of-range key " + to_string(q));
    };
    const auto nx = static_cast<Position>(g.x_length);
    const auto ny = static_cast<Position>(g.y_length);
    if (q.l >= nx || q.m >= ny || q.l == kInfinity || q.m == kInfinity) fail();
    if (q.t != kInfinity && (q.t <= q.l || q.t >= nx)) fail();
    if (q.b != kInfinity && (q.b <= q.m || q.b >= ny)) fail();
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (unsigned char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(static_cast<char>(c));
        } else if (c < 0x20 || c == 0x7F) {
            std::array<char, 8> hex{};
            std::snprintf(hex.data(), hex.size(), "\\\\x%02X", c);
            out += hex.data();
        } else {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

std::string dot_position(Position p) { return p == kInfinity ? "inf" : std::to_string(p); }

} // namespace

std::string serialize(const Mdag& input) {
    const Mdag g = canonicalize(input);
    std::string out(kMdagMagic);
    put_u32(out, g.x_length);
    put_u32(out, g.y_length);
    put_u32(out, g.sigma);
    put_u32(out, static_cast<std::uint32_t>(g.node_count()));
    put_u32(out, static_cast<std::uint32_t>(g.edge_count()));
    const auto& f = g.flags();
    put_u32(out, (f.built ? kFlagBuilt : 0) | (f.pruned ? kFlagPruned : 0) |
                     (f.compacted ? kFlagCompacted : 0) | (f.verified ? kFlagVerified : 0));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& q = g.node(v).key;
        put_u32(out, v);
        put_position(out, q.l);
        put_position(out, q.m);
        put_position(out, q.t);
        put_position(out, q.b);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& e : g.node(v).out) {
            put_u32(out, v);
            put_u32(out, e.target);
            put_u32(out, static_cast<std::uint32_t>(e.label.size()));
            out += e.label;
        }
    }
    put_u32(out, crc32(out));
    return out;
}

Mdag deserialize(std::string_view bytes) {
    using Kind = load_error::Kind;
    Reader in(bytes);
    if (in.take(kMdagMagic.size()) != kMdagMagic) {
        throw load_error(Kind::corrupt, "load(): bad magic");
    }
    Mdag g;
    g.x_length = in.u32();
    g.y_length = in.u32();
    g.sigma = in.u32();
    const std::uint32_t node_count = in.u32();
    const std::uint32_t edge_count = in.u32();
    const std::uint32_t flags = in.u32();
    if (node_count < 2) {
        throw load_error(Kind::corrupt, "load(): fewer than two nodes");
    }
    // each record needs at least 20 / 12 bytes; reject absurd counts early
    if (static_cast<std::uint64_t>(node_count) * 20 + static_cast<std::uint64_t>(edge_count) * 12 >
        in.remaining()) {
        throw load_error(Kind::corrupt, "load(): file is truncated");
    }

    std::vector<Quadruple> keys(node_count);
    for (std::uint32_t k = 0; k < node_count; ++k) {
        if (in.u32() != k) {
            throw load_error(Kind::corrupt, "load(): node records out of order");
        }
        keys[k].l = in.position();
        keys[k].m = in.position();
        keys[k].t = in.position();
        keys[k].b = in.position();
    }
    struct RawEdge {
        NodeId from;
        NodeId to;
        std::string label;
    };
    std::vector<RawEdge> edges;
    edges.reserve(edge_count);
    for (std::uint32_t k = 0; k < edge_count; ++k) {
        RawEdge e;
        e.from = in.u32();
        e.to = in.u32();
        e.label = std::string(in.take(in.u32()));
        edges.push_back(std::move(e));
    }
    if (in.remaining() != kChecksumSize) {
        throw load_error(Kind::corrupt, "load(): unexpected trailing bytes");
    }
    const auto body = bytes.substr(0, bytes.size() - kChecksumSize);
    if (in.u32() != crc32(body)) {
        throw load_error(Kind::checksum_mismatch, "load(): checksum mismatch");
    }

    try {
        for (NodeId v = 2; v < node_count; ++v) {
            check_key_range(keys[v], g, v);
            g.add_node(keys[v]);
        }
        if (keys[kSource] != kSourceQuadruple || keys[kSink] != kSinkQuadruple) {
            throw invariant_error("source or sink record carries the wrong key");
        }
        for (auto& e : edges) {
            if (e.from >= node_count || e.to >= node_count) {
                throw invariant_error("edge refers to an unknown node");
            }
            if (e.to != kSink && e.to <= e.from) {
                throw invariant_error("node records are not topologically ordered");
            }
            g.add_edge(e.from, e.to, std::move(e.label));
        }
        g.flags().built = (flags & kFlagBuilt) != 0;
        g.flags().pruned = (flags & kFlagPruned) != 0;
        g.flags().compacted = (flags & kFlagCompacted) != 0;
        g.flags().verified = (flags & kFlagVerified) != 0;
        validate(g);
    } catch (const invariant_error& err) {
        throw load_error(Kind::invariant_violation, std::string("load(): ") + err.what());
    }
    return g;
}

void save(const Mdag& g, const std::filesystem::path& path) {
    if (!g.flags().built || !g.flags().pruned) {
        throw std::invalid_argument("save(): only built and pruned graphs can be saved");
    }
    const std::string bytes = serialize(g);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("save(): cannot open " + path.string());
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("save(): write failed for " + path.string());
    }
}

Mdag load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw load_error(load_error::Kind::io, "load(): cannot open " + path.string());
    }
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

std::string export_dot(const Mdag& g) {
    std::ostringstream out;
    out << "digraph mdag {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  n" << v << " [label=\"";
        if (v == kSink) {
            out << "t";
        } else {
            const auto& q = g.node(v).key;
            if (v == kSource) {
                out << "s ";
            }
            out << "⟨" << dot_position(q.l) << ',' << dot_position(q.m) << ','
                << dot_position(q.t) << ',' << dot_position(q.b) << "⟩";
        }
        out << "\"];\n";
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& e : g.node(v).out) {
            out << "  n" << v << " -> n" << e.target << " [label=\"" << dot_escape(e.label)
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace mcsdag
