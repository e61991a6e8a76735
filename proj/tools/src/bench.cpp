#include "mcsdag/cli/cli.hpp"

#include <chrono>
#include <ostream>
#include <random>

#include "mcsdag/builder.hpp"
#include "mcsdag/query.hpp"

namespace mcsdag::cli {

namespace {

constexpr std::string_view kLetters = "ACGTBDEFHIJKLMNOPQRSUVWXYZ";

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

std::pair<std::string, std::string> random_pair(std::size_t n, std::size_t sigma,
                                                std::uint64_t seed) {
    if (sigma == 0 || sigma > kLetters.size()) {
        throw std::invalid_argument("random_pair(): sigma must be in [1, " +
                                    std::to_string(kLetters.size()) + "]");
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(sigma)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
    std::string x(n, ' ');
    std::string y(n, ' ');
    for (auto& c : x) c = kLetters[pick(rng)];
    for (auto& c : y) c = kLetters[pick(rng)];
    return {std::move(x), std::move(y)};
}

BenchRow bench_instance(std::size_t n, std::size_t sigma, std::uint64_t seed,
                        std::uint64_t enumeration_cap) {
    const auto [x, y] = random_pair(n, sigma, seed);
    BenchRow row;
    row.n = n;
    row.sigma = sigma;
    row.seed = seed;

    auto start = std::chrono::steady_clock::now();
    const Mdag pruned = build_mdag(x, y);
    const Mdag compact = compact_mdag(pruned);
    row.build_ms = millis_since(start);

    const MdagStats s = stats(pruned);
    row.nodes = s.nodes;
    row.edges = s.edges;
    row.max_lm_multiplicity = s.max_lm_multiplicity;
    row.compact_nodes = compact.node_count();
    row.compact_edges = compact.edge_count();

    const MdagQuery query(compact);
    row.mcs_count_digits = query.count().str().size();

    start = std::chrono::steady_clock::now();
    auto cursor = query.cursor();
    while (row.enumerated < enumeration_cap && cursor.next()) {
        ++row.enumerated;
    }
    row.enumerate_ms = millis_since(start);
    if (row.enumerated != 0) {
        row.frames_per_solution =
            static_cast<double>(cursor.stats().frames) / static_cast<double>(row.enumerated);
    }
    return row;
}

void write_bench_header(std::ostream& out) {
    out << "n,sigma,seed,nodes,edges,build_ms,mcs_count_digits,frames_per_solution,"
           "max_lm_multiplicity\n";
}

void write_bench_row(std::ostream& out, const BenchRow& row) {
    out << row.n << ',' << row.sigma << ',' << row.seed << ',' << row.nodes << ',' << row.edges
        << ',' << row.build_ms << ',' << row.mcs_count_digits << ',' << row.frames_per_solution
        << ',' << row.max_lm_multiplicity << '\n';
}

} // namespace mcsdag::cli
