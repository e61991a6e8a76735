#include <gtest/gtest.h>

#include <boost/crc.hpp>

#include "mcsdag/builder.hpp"
#include "mcsdag/mdag_io.hpp"
#include "mcsdag/query.hpp"
#include "test_support.hpp"

using namespace mcsdag;

namespace {

Mdag fig1() { return compact_mdag(build_mdag(fixtures::kFig1X, fixtures::kFig1Y)); }

load_error::Kind load_kind(std::string_view bytes) {
    try {
        deserialize(bytes);
    } catch (const load_error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "deserialize accepted the input";
    return load_error::Kind::io;
}

void put_u32_at(std::string& bytes, std::size_t at, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) bytes[at + k] = static_cast<char>((v >> (8 * k)) & 0xFFu);
}

std::uint32_t crc32(std::string_view body) {
    boost::crc_32_type crc;
    crc.process_bytes(body.data(), body.size());
    return crc.checksum();
}

} // namespace

TEST(MdagIo, RoundTrip) {
    const auto dir = testing_support::scratch_dir("io");
    const Mdag g = fig1();
    save(g, dir / "fig1.mdag");
    const Mdag back = load(dir / "fig1.mdag");
    EXPECT_EQ(MdagQuery(back).count(), 5);
    EXPECT_EQ(spell_all(back), spell_all(g));
    EXPECT_EQ(back.flags(), g.flags());
    EXPECT_EQ(back.x_length, 9u);
    EXPECT_EQ(back.y_length, 9u);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        EXPECT_EQ(back.node(v).key, canonicalize(g).node(v).key);
    }
    std::filesystem::remove_all(dir);
}

TEST(MdagIo, SaveLoadIdempotent) {
    const std::string bytes = serialize(fig1());
    EXPECT_EQ(serialize(deserialize(bytes)), bytes);
    const std::string raw = serialize(build_mdag(fixtures::kSwingRightX, fixtures::kSwingRightY));
    EXPECT_EQ(serialize(deserialize(raw)), raw);
}

TEST(MdagIo, HeaderLayout) {
    const std::string bytes = serialize(fig1());
    EXPECT_EQ(bytes.substr(0, 6), "MDAGv1");
    // flags: built | pruned | compacted
    EXPECT_EQ(static_cast<unsigned char>(bytes[6 + 5 * 4]), 0x7);
}

TEST(MdagIo, InfinityEncodedAsMinusTwo) {
    const std::string bytes = serialize(build_mdag("AB", "CD"));
    // source record follows the 30-byte header: id, l, m, t, b
    const std::string source_t = bytes.substr(30 + 12, 4);
    EXPECT_EQ(source_t, std::string("\xfe\xff\xff\xff", 4));
}

TEST(MdagIo, RejectsTruncatedFile) {
    const std::string bytes = serialize(fig1());
    EXPECT_EQ(load_kind(bytes.substr(0, bytes.size() - 5)), load_error::Kind::corrupt);
    EXPECT_EQ(load_kind(bytes.substr(0, 10)), load_error::Kind::corrupt);
    EXPECT_EQ(load_kind(""), load_error::Kind::corrupt);
}

TEST(MdagIo, RejectsBadMagic) {
    std::string bytes = serialize(fig1());
    bytes[0] = 'X';
    EXPECT_EQ(load_kind(bytes), load_error::Kind::corrupt);
}

TEST(MdagIo, RejectsChecksumMismatch) {
    std::string bytes = serialize(fig1());
    bytes[bytes.size() - 6] ^= 0x01; // inside the last label
    EXPECT_EQ(load_kind(bytes), load_error::Kind::checksum_mismatch);
}

TEST(MdagIo, RejectsInvariantViolationWithValidChecksum) {
    // Turn the source's "AC" label into "CC", a duplicate first byte.
    std::string bytes = serialize(fig1());
    const auto at = bytes.find("AC");
    ASSERT_NE(at, std::string::npos);
    bytes[at] = 'C';
    put_u32_at(bytes, bytes.size() - 4, crc32(std::string_view(bytes).substr(0, bytes.size() - 4)));
    EXPECT_EQ(load_kind(bytes), load_error::Kind::invariant_violation);
}

TEST(MdagIo, RejectsBackwardEdge) {
    std::string bytes = serialize(build_mdag("AB", "AB"));
    // nodes: s, t, A, AB; edges s->2 'A', 2->3 'B', 3->t '$'. Point 2->3 back at 2.
    const auto at = bytes.find('B', 30 + 4 * 20);
    ASSERT_NE(at, std::string::npos);
    put_u32_at(bytes, at - 8, 2);
    put_u32_at(bytes, bytes.size() - 4, crc32(std::string_view(bytes).substr(0, bytes.size() - 4)));
    EXPECT_EQ(load_kind(bytes), load_error::Kind::invariant_violation);
}

TEST(MdagIo, MissingFile) {
    try {
        load("/nonexistent/dir/none.mdag");
        FAIL();
    } catch (const load_error& e) {
        EXPECT_EQ(e.kind(), load_error::Kind::io);
    }
}

TEST(MdagIo, SaveRequiresPrunedGraph) {
    const auto dir = testing_support::scratch_dir("io_unpruned");
    EXPECT_THROW(save(expand_mdag("AB", "BA"), dir / "x.mdag"), std::invalid_argument);
    std::filesystem::remove_all(dir);
}

TEST(ExportDot, RunningExample) {
    const std::string dot = export_dot(fig1());
    EXPECT_TRUE(dot.starts_with("digraph mdag {"));
    EXPECT_NE(dot.find("⟨3,1,inf,inf⟩"), std::string::npos);
    EXPECT_NE(dot.find("label=\"TAGG$\""), std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
    EXPECT_EQ(edges, 7u);
    EXPECT_EQ(dot, export_dot(fig1()));
}

TEST(ExportDot, DisjointAlphabets) {
    const std::string dot = export_dot(build_mdag("AB", "CD"));
    EXPECT_NE(dot.find("n0 -> n1 [label=\"$\"]"), std::string::npos);
    EXPECT_EQ(dot.find("n2"), std::string::npos);
}

TEST(ExportDot, EscapesQuotes) {
    const std::string dot = export_dot(compact_mdag(build_mdag("a\"b", "a\"b")));
    EXPECT_NE(dot.find("a\\\"b$"), std::string::npos);
}
