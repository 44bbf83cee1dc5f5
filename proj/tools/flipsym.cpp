// Command-line front end: seed generation, random-walk search, exact
// verification, Hensel lifting, component enumeration and desymmetrized
// export of scheme files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flipsym/atlas.hpp"
#include "flipsym/lift.hpp"
#include "flipsym/scheme_io.hpp"
#include "flipsym/search.hpp"
#include "flipsym/seeds.hpp"

namespace {

using namespace flipsym;

constexpr int kExitOk = 0;
constexpr int kExitTargetNotMet = 1;
constexpr int kExitInvalidInput = 2;

std::string term_name(int i, int j, char family) {
    std::ostringstream out;
    out << family << (i + 1) << (j + 1);
    return out.str();
}

std::string linear_form(const IntMatrix& m, char family) {
    std::string out;
    bool first = true;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            const int64_t c = m.at(i, j);
            if (!c)
                continue;
            if (first) {
                if (c < 0)
                    out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            const int64_t a = c < 0 ? -c : c;
            if (a != 1)
                out += std::to_string(a) + "*";
            out += term_name(i, j, family);
        }
    }
    if (first)
        out = "0";
    return out;
}

std::string pretty_algorithm(const std::vector<IntRankOneTensor>& tensors, int n) {
    std::ostringstream out;
    for (std::size_t l = 0; l < tensors.size(); ++l)
        out << "m" << (l + 1) << " = (" << linear_form(tensors[l].a, 'a') << ") * ("
            << linear_form(tensors[l].b, 'b') << ")\n";
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            out << "c" << (r + 1) << (s + 1) << " =";
            bool first = true;
            for (std::size_t l = 0; l < tensors.size(); ++l) {
                // The third factor's entry (k, i) feeds output entry (i, k).
                const int64_t c = tensors[l].c.at(s, r);
                if (!c)
                    continue;
                if (first) {
                    out << ' ';
                    if (c < 0)
                        out << '-';
                    first = false;
                } else {
                    out << (c < 0 ? " - " : " + ");
                }
                const int64_t a = c < 0 ? -c : c;
                if (a != 1)
                    out << a << '*';
                out << 'm' << (l + 1);
            }
            if (first)
                out << " 0";
            out << '\n';
        }
    }
    return out.str();
}

int cmd_gen_start(const std::string& n_text, const std::string& group_text,
                  const std::string& partition_text, const std::string& out_path) {
    const int n = std::stoi(n_text);
    auto group = parse_group(group_text);
    if (!group || *group == Group::None) {
        std::cerr << "error: group must be C3 or C3xZ2\n";
        return kExitInvalidInput;
    }
    const DiagonalPartition partition = parse_partition(partition_text);
    std::string reason;
    if (!validate_partition(partition, n, *group, &reason)) {
        std::cerr << "error: invalid partition: " << reason << "\n";
        return kExitInvalidInput;
    }
    const Scheme seed = make_start(n, *group, partition);
    save_scheme(out_path, seed);
    std::cout << "rank " << seed.rank() << "\n";
    return kExitOk;
}

int cmd_search(const std::string& start_path, uint64_t limit, uint64_t plus, int target,
               uint64_t seed, unsigned workers, double progress, const std::string& out_path) {
    const AnyScheme loaded = load_scheme(start_path);
    const Scheme* start = std::get_if<Scheme>(&loaded);
    if (!start) {
        std::cerr << "error: search requires an F2 scheme file\n";
        return kExitInvalidInput;
    }
    WalkParams params;
    params.limit = limit;
    params.plus_interval = plus;
    params.target_rank = target;
    params.seed = seed;
    SearchOptions options;
    options.workers = workers;
    options.progress_interval = progress;
    const WalkOutcome outcome = run_parallel(*start, params, options);
    save_scheme(out_path, outcome.best);
    std::cout << "best_rank " << outcome.best_rank << "\n"
              << "flips " << outcome.flips << "\n"
              << "plus_transitions " << outcome.plus_transitions << "\n"
              << "termination " << to_string(outcome.termination) << "\n";
    return outcome.best_rank <= target ? kExitOk : kExitTargetNotMet;
}

int cmd_verify(const std::string& path) {
    const AnyScheme s = load_scheme(path);
    const bool ok = verify_any(s);
    std::cout << "field=" << field_name(field_of(s)) << " group=" << group_name(group_of(s))
              << " n=" << dim_of(s) << " rank=" << rank_of(s) << (ok ? " PASS" : " FAIL") << "\n";
    return ok ? kExitOk : kExitTargetNotMet;
}

int cmd_lift(const std::string& path, int max_order, int attempts, uint64_t seed,
             const std::string& out_path) {
    const AnyScheme loaded = load_scheme(path);
    const Scheme* f2 = std::get_if<Scheme>(&loaded);
    if (!f2) {
        std::cerr << "error: lift requires an F2 scheme file\n";
        return kExitInvalidInput;
    }
    LiftOptions options;
    options.max_order = max_order;
    options.attempts = attempts;
    options.seed = seed;
    const LiftResult result = lift(*f2, options);
    for (const auto& entry : result.log)
        std::cerr << "attempt=" << entry.attempt << " order_reached=" << entry.order_reached
                  << " lifted=" << (entry.lifted ? "yes" : "no") << "\n";
    if (!result.scheme) {
        std::cerr << "no integer lift found (max order reached: " << result.max_order_reached
                  << ")\n";
        return kExitTargetNotMet;
    }
    save_scheme(out_path, *result.scheme);
    std::cout << "lifted rank " << result.scheme->rank() << "\n";
    return kExitOk;
}

int cmd_atlas(const std::string& start_path, const std::string& dot_path,
              const std::string& report_path, std::size_t max_vertices, int target) {
    const AnyScheme loaded = load_scheme(start_path);
    const Scheme* start = std::get_if<Scheme>(&loaded);
    if (!start) {
        std::cerr << "error: atlas requires an F2 scheme file\n";
        return kExitInvalidInput;
    }
    AtlasOptions options;
    options.max_vertices = max_vertices;
    options.target_rank = target;
    const FlipGraph graph = enumerate_component(*start, options);
    {
        std::ofstream out(dot_path);
        if (!out)
            throw SchemeIoError("cannot write '" + dot_path + "'");
        out << to_dot(graph);
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw SchemeIoError("cannot write '" + report_path + "'");
        write_report(graph, out);
    }
    std::size_t reachable = 0;
    for (const auto& v : graph.vertices)
        reachable += v.reaches_target ? 1 : 0;
    std::cout << "vertices " << graph.vertices.size() << "\n"
              << "edges " << graph.edge_count() << "\n"
              << "target_rank " << graph.target_rank << "\n"
              << "reduction_reachable " << reachable << "\n"
              << "truncated " << (graph.truncated ? 1 : 0) << "\n";
    return kExitOk;
}

int cmd_expand(const std::string& path, const std::string& out_path, bool pretty) {
    const AnyScheme loaded = load_scheme(path);
    std::vector<IntRankOneTensor> tensors;
    int n = dim_of(loaded);
    if (const Scheme* f2 = std::get_if<Scheme>(&loaded)) {
        for (const auto& t : expand(*f2))
            tensors.push_back(to_int(t));
    } else {
        tensors = expand(std::get<IntScheme>(loaded));
    }
    if (pretty) {
        std::ofstream out(out_path);
        if (!out)
            throw SchemeIoError("cannot write '" + out_path + "'");
        out << pretty_algorithm(tensors, n);
        std::cout << "products " << tensors.size() << "\n";
        return kExitOk;
    }
    if (field_of(loaded) == Field::F2) {
        Scheme plain;
        plain.n = n;
        plain.group = Group::None;
        for (const auto& t : tensors)
            plain.fixed.emplace_back(mod2(t.a), mod2(t.b), mod2(t.c));
        save_scheme(out_path, plain);
    } else {
        IntScheme plain;
        plain.n = n;
        plain.group = Group::None;
        plain.fixed = tensors;
        save_scheme(out_path, plain);
    }
    std::cout << "tensors " << tensors.size() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flip-graph search for matrix multiplication schemes with symmetry"};
    app.require_subcommand(1);

    // gen-start
    auto* gen = app.add_subcommand("gen-start", "write the seed scheme of a diagonal partition");
    std::string gen_n, gen_group, gen_partition, gen_out;
    gen->add_option("--n", gen_n, "matrix dimension (1..8)")->required();
    gen->add_option("--group", gen_group, "C3 or C3xZ2")->required();
    gen->add_option("--partition", gen_partition, "e.g. {1,5},{2,4},{3}")->required();
    gen->add_option("--out", gen_out, "output scheme file")->required();

    // search
    auto* search = app.add_subcommand("search", "random-walk search from a seed scheme");
    std::string search_start, search_out;
    uint64_t search_limit = 100000000, search_plus = 50000, search_seed = 1;
    int search_target = 0;
    unsigned search_workers = 1;
    double search_progress = 0;
    search->add_option("--start", search_start, "seed scheme file")->required();
    search->add_option("--limit", search_limit, "path-length limit L");
    search->add_option("--plus", search_plus, "plus-transition parameter M");
    search->add_option("--target", search_target, "target rank R")->required();
    search->add_option("--seed", search_seed, "RNG seed");
    search->add_option("--workers", search_workers, "parallel independent walks");
    search->add_option("--progress", search_progress, "status line interval in seconds (0: off)");
    search->add_option("--out", search_out, "output scheme file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "exact verification of a scheme file");
    std::string verify_path;
    verify->add_option("file", verify_path, "scheme file")->required();

    // lift
    auto* lift_cmd = app.add_subcommand("lift", "Hensel-lift an F2 scheme to integers");
    std::string lift_path, lift_out;
    int lift_max_order = 16, lift_attempts = 8;
    uint64_t lift_seed = 1;
    lift_cmd->add_option("file", lift_path, "F2 scheme file")->required();
    lift_cmd->add_option("--max-order", lift_max_order, "highest 2-adic order to try");
    lift_cmd->add_option("--attempts", lift_attempts, "retries with random solution choices");
    lift_cmd->add_option("--seed", lift_seed, "RNG seed for retries");
    lift_cmd->add_option("--out", lift_out, "output scheme file")->required();

    // atlas
    auto* atlas = app.add_subcommand("atlas", "exhaustively enumerate a flip component");
    std::string atlas_start, atlas_dot, atlas_report;
    std::size_t atlas_max_vertices = 200000;
    int atlas_target = -1;
    atlas->add_option("--start", atlas_start, "seed scheme file")->required();
    atlas->add_option("--out-dot", atlas_dot, "DOT output file")->required();
    atlas->add_option("--out-report", atlas_report, "JSON-lines report file");
    atlas->add_option("--max-vertices", atlas_max_vertices, "vertex cap");
    atlas->add_option("--target", atlas_target, "reduction target rank (-1: rank - |G|)");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "desymmetrize a scheme");
    std::string expand_path, expand_out;
    bool expand_pretty = false;
    expand_cmd->add_option("file", expand_path, "scheme file")->required();
    expand_cmd->add_option("--out", expand_out, "output file")->required();
    expand_cmd->add_flag("--pretty", expand_pretty, "human-readable algorithm listing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen_start(gen_n, gen_group, gen_partition, gen_out);
        if (search->parsed())
            return cmd_search(search_start, search_limit, search_plus, search_target, search_seed,
                              search_workers, search_progress, search_out);
        if (verify->parsed())
            return cmd_verify(verify_path);
        if (lift_cmd->parsed())
            return cmd_lift(lift_path, lift_max_order, lift_attempts, lift_seed, lift_out);
        if (atlas->parsed())
            return cmd_atlas(atlas_start, atlas_dot, atlas_report, atlas_max_vertices,
                             atlas_target);
        if (expand_cmd->parsed())
            return cmd_expand(expand_path, expand_out, expand_pretty);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
