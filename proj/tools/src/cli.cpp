#include "mcsdag/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcsdag/mcsdag.hpp"

namespace mcsdag::cli {

namespace {

// Reported as exit code 1.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

void print_stats(std::ostream& out, const Mdag& g, std::string_view heading) {
    const MdagStats s = stats(g);
    out << heading << "nodes: " << s.nodes << '\n'
        << heading << "edges: " << s.edges << '\n'
        << heading << "max_out_degree: " << s.max_out_degree << '\n'
        << heading << "depth: " << s.depth << '\n'
        << heading << "distinct_lm: " << s.distinct_lm << '\n'
        << heading << "max_lm_multiplicity: " << s.max_lm_multiplicity << '\n'
        << heading << "antichain_violations: " << s.antichain_violations << '\n'
        << heading << "pareto_violations: " << s.pareto_violations << '\n';
}

std::string flag_list(const MdagFlags& f) {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (on) {
            s += s.empty() ? "" : ",";
            s += name;
        }
    };
    add(f.built, "built");
    add(f.pruned, "pruned");
    add(f.compacted, "compacted");
    add(f.verified, "verified");
    return s.empty() ? "none" : s;
}

BigInt parse_index(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return c >= '0' && c <= '9'; })) {
        throw usage_error("index must be a positive decimal integer, got '" + text + "'");
    }
    return BigInt(text);
}

std::vector<std::string> oracle_strings(std::string_view x, std::string_view y) {
    // MCS(X, Y) = MCS(Y, X); enumerate subsequences of the shorter string
    if (x.size() > y.size()) {
        std::swap(x, y);
    }
    return oracle::brute_force_mcs(x, y).strings;
}

bool print_emission(std::ostream& out, const Emission& em, bool compressed) {
    if (compressed) {
        out << em.keep << '\t' << em.suffix << '\n';
    } else {
        out << em.text << '\n';
    }
    return true;
}

struct Options {
    std::string x;
    std::string y;
    std::string graph;
    std::string output;
    std::string prefix;
    std::string index;
    std::string member;
    std::string lengths = "50,100,200";
    bool no_compact = false;
    bool verify = false;
    bool show_stats = false;
    bool compressed = false;
    std::uint64_t limit = 0;
    std::uint64_t verify_cap = kDefaultVerifyCap;
    std::size_t max_nodes = 0;
    std::size_t sigma = 4;
    std::uint64_t seed = 1;
    std::uint64_t enumeration_cap = 1000000;
};

int cmd_build(const Options& o, Streams io) {
    const std::string x = read_input(o.x);
    const std::string y = read_input(o.y);
    const Mdag pruned = build_mdag(x, y, BuildLimits{o.max_nodes});
    Mdag g = o.no_compact ? pruned : compact_mdag(pruned);
    if (o.show_stats) {
        print_stats(io.out, pruned, "pruned.");
        const MonotonicityReport mono = check_monotonicity(pruned);
        io.out << "pruned.monotonicity_forward_violations: " << mono.forward << '\n'
               << "pruned.monotonicity_reverse_violations: " << mono.reverse << '\n';
        if (!o.no_compact) {
            print_stats(io.out, g, "compact.");
        }
    }
    if (o.verify) {
        const VerifyReport r = verify_mdag(g, x, y, o.verify_cap);
        io.out << "verify: checked " << r.checked << (r.truncated ? " (capped)" : "")
               << ", not maximal " << r.not_maximal << ", out of order " << r.out_of_order
               << '\n';
        if (!r.ok()) {
            io.err << "verify failed at '" << r.first_failure << "'\n";
            return kExitData;
        }
        g.flags().verified = true;
    }
    save(g, o.output);
    io.out << "wrote " << o.output << ": " << g.node_count() << " nodes, " << g.edge_count()
           << " edges, " << MdagQuery(g).count() << " strings\n";
    return kExitOk;
}

int cmd_list(const Options& o, Streams io) {
    const Mdag g = load(o.graph);
    const MdagQuery q(g);
    const EmitMode mode = o.compressed ? EmitMode::compressed : EmitMode::full;
    std::uint64_t emitted = 0;
    auto on_emit = [&](const Emission& em) {
        print_emission(io.out, em, o.compressed);
        return o.limit == 0 || ++emitted < o.limit;
    };
    if (o.prefix.empty()) {
        q.enumerate(on_emit, mode);
    } else {
        q.search_prefix(o.prefix, on_emit, mode);
    }
    return kExitOk;
}

int cmd_check(const Options& o, Streams io) {
    const std::string x = read_input(o.x);
    const std::string y = read_input(o.y);
    const auto expected = oracle_strings(x, y);
    const Mdag g = compact_mdag(build_mdag(x, y));
    const MdagQuery q(g);
    std::vector<std::string> got;
    q.enumerate([&](const Emission& em) {
        got.emplace_back(em.text);
        return true;
    });
    const BigInt count = q.count();
    io.out << "mdag " << count << " = oracle " << expected.size() << '\n';
    if (got == expected && count == expected.size()) {
        io.out << "OK\n";
        return kExitOk;
    }
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                        std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                        std::back_inserter(extra));
    for (const auto& s : missing) io.err << "missing: " << s << '\n';
    for (const auto& s : extra) io.err << "extra: " << s << '\n';
    if (missing.empty() && extra.empty()) {
        io.err << "string sets agree but count or order differs\n";
    }
    io.out << "MISMATCH\n";
    return kExitOracleMismatch;
}

int cmd_bench(const Options& o, Streams io) {
    std::vector<std::size_t> lengths;
    {
        std::istringstream in(o.lengths);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            unsigned long n = 0;
            try {
                n = std::stoul(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != item.size() || item.empty() || n == 0) {
                throw usage_error("--lengths expects positive integers, got '" + item + "'");
            }
            lengths.push_back(n);
        }
    }
    write_bench_header(io.out);
    double c_max = 0;
    bool pareto_ok = true;
    for (std::size_t n : lengths) {
        const BenchRow row = bench_instance(n, o.sigma, o.seed, o.enumeration_cap);
        write_bench_row(io.out, row);
        const double cube = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
        c_max = std::max(c_max, static_cast<double>(row.nodes) / cube);
        const double rate =
            row.enumerate_ms > 0 ? static_cast<double>(row.enumerated) / row.enumerate_ms * 1e3 : 0;
        io.err << "n=" << n << ": compact " << row.compact_nodes << " nodes / "
               << row.compact_edges << " edges, enumerated " << row.enumerated << " strings at "
               << static_cast<std::uint64_t>(rate) << "/s\n";
        if (row.max_lm_multiplicity >= 2 * n) {
            io.err << "n=" << n << ": per-(l,m) multiplicity " << row.max_lm_multiplicity
                   << " is not below 2n\n";
            pareto_ok = false;
        }
    }
    io.err << "C = " << c_max << " (max nodes / n^3)\n";
    return pareto_ok ? kExitOk : kExitData;
}

} // namespace

std::string read_input(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') {
        return arg;
    }
    const std::string path = arg.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read input file " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!text.empty() && text.back() == '\n') {
        text.pop_back();
    }
    return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal common subsequence DAG toolkit", "mcsdag"};
    app.require_subcommand(1);
    Options o;
    const Streams io{out, err};

    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("-x", o.x, "first string, or @file")->required();
        cmd->add_option("-y", o.y, "second string, or @file")->required();
    };
    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("-g,--graph", o.graph, "MDAG file")->required();
    };

    auto* build = app.add_subcommand("build", "build an MDAG and save it");
    add_pair(build);
    build->add_option("-o,--output", o.output, "output file")->required();
    build->add_flag("--no-compact", o.no_compact, "keep single-character edges");
    build->add_flag("--verify", o.verify, "check every enumerated string for maximality");
    build->add_option("--verify-cap", o.verify_cap, "strings checked by --verify");
    build->add_flag("--stats", o.show_stats, "print structural statistics");
    build->add_option("--max-nodes", o.max_nodes, "abort beyond this many nodes (0 = no limit)");

    auto* count = app.add_subcommand("count", "number of maximal common subsequences");
    add_graph(count);

    auto* list = app.add_subcommand("list", "enumerate in lexicographic order");
    add_graph(list);
    list->add_option("--prefix", o.prefix, "only strings starting with this prefix");
    list->add_option("--limit", o.limit, "stop after this many strings (0 = all)");
    list->add_flag("--compressed", o.compressed, "print <kept prefix length>\\t<suffix>");

    auto* select = app.add_subcommand("select", "i-th string, 1-based");
    add_graph(select);
    select->add_option("-i,--index", o.index, "index")->required();

    auto* rank = app.add_subcommand("rank", "1-based position of a string");
    add_graph(rank);
    rank->add_option("-s,--string", o.member, "member string")->required();

    auto* search = app.add_subcommand("search", "strings with a given prefix");
    add_graph(search);
    search->add_option("-p,--prefix", o.prefix, "prefix")->required();

    auto* stats_cmd = app.add_subcommand("stats", "structural statistics of a saved MDAG");
    add_graph(stats_cmd);

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    add_graph(dot);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force MCS for short strings");
    add_pair(oracle_cmd);

    auto* check = app.add_subcommand("check", "compare the MDAG against the brute-force oracle");
    add_pair(check);

    auto* bench = app.add_subcommand("bench", "random-instance benchmark, CSV on stdout");
    bench->add_option("--lengths", o.lengths, "comma-separated string lengths");
    bench->add_option("--sigma", o.sigma, "alphabet size")->check(CLI::Range(1, 26));
    bench->add_option("--seed", o.seed, "random seed");
    bench->add_option("--enumeration-cap", o.enumeration_cap,
                      "strings enumerated per instance for throughput");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) return cmd_build(o, io);
        if (*list) return cmd_list(o, io);
        if (*count) {
            const Mdag g = load(o.graph);
            out << MdagQuery(g).count() << '\n';
            return kExitOk;
        }
        if (*select) {
            const BigInt i = parse_index(o.index);
            const Mdag g = load(o.graph);
            out << MdagQuery(g).select(i) << '\n';
            return kExitOk;
        }
        if (*rank) {
            const Mdag g = load(o.graph);
            out << MdagQuery(g).rank(o.member) << '\n';
            return kExitOk;
        }
        if (*search) {
            const Mdag g = load(o.graph);
            MdagQuery(g).search_prefix(o.prefix, [&](const Emission& em) {
                return print_emission(out, em, false);
            });
            return kExitOk;
        }
        if (*stats_cmd) {
            const Mdag g = load(o.graph);
            out << "flags: " << flag_list(g.flags()) << '\n'
                << "x_length: " << g.x_length << '\n'
                << "y_length: " << g.y_length << '\n'
                << "sigma: " << g.sigma << '\n'
                << "count: " << MdagQuery(g).count() << '\n';
            print_stats(out, g, "");
            return kExitOk;
        }
        if (*dot) {
            out << export_dot(load(o.graph));
            return kExitOk;
        }
        if (*oracle_cmd) {
            for (const auto& s : oracle_strings(read_input(o.x), read_input(o.y))) {
                out << s << '\n';
            }
            return kExitOk;
        }
        if (*check) return cmd_check(o, io);
        if (*bench) return cmd_bench(o, io);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

} // namespace mcsdag::cli
