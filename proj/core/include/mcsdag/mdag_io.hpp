#ifndef MCSDAG_MDAG_IO_HPP
#define MCSDAG_MDAG_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcsdag/mdag.hpp"

namespace mcsdag {

/*
 * MdagFileV1, all integers little-endian:
 *
 *   magic        6 bytes  "MDAGv1"
 *   n_x, n_y     u32 each
 *   sigma        u32
 *   node_count   u32
 *   edge_count   u32
 *   flags        u32      bit0 built, bit1 pruned, bit2 compacted, bit3 verified
 *   node_count x { id u32, l i32, m i32, t i32, b i32 }     kInfinity stored as -2
 *   edge_count x { from u32, to u32, label_length u32, label bytes }
 *   checksum     u32      CRC-32 of every preceding byte
 *
 * Nodes appear in id order, which is topological (source 0, sink 1); edges
 * are grouped by source id and ordered by label within a node.
 */
inline constexpr std::string_view kMdagMagic = "MDAGv1";
inline constexpr std::int32_t kEncodedInfinity = -2;

class load_error : public std::runtime_error {
public:
    enum class Kind {
        io,                  ///< file could not be read
        corrupt,             ///< bad magic, truncated or malformed records
        checksum_mismatch,
        invariant_violation, ///< well-formed but not a valid MDAG
    };

    load_error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string serialize(const Mdag& g);

/// Throws load_error.
Mdag deserialize(std::string_view bytes);

/// Requires a pruned graph; throws std::invalid_argument otherwise and
/// std::runtime_error on I/O failure.
void save(const Mdag& g, const std::filesystem::path& path);

/// Reads, checks the checksum and every structural invariant.
Mdag load(const std::filesystem::path& path);

/// Graphviz description: nodes labelled with their quadruple, edges with
/// their label. Output order follows node ids, so it is stable.
std::string export_dot(const Mdag& g);

} // namespace mcsdag

#endif
