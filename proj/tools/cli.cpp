#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "pafp/pafp.hpp"

namespace pafp::cli {

namespace {

using nlohmann::json;

void write_text_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error(path + ": cannot open for writing");
    f << text;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<Vertex> seq;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            seq.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad vertex '" + tok + "' in path");
        }
    }
    return seq;
}

std::string format_path(const std::vector<Vertex>& seq) {
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out << ' ';
        out << seq[i];
    }
    return out.str();
}

int run_solve(const std::string& file, const std::string& algo, int max_k, long long budget,
              int threads, std::ostream& out, std::ostream& err) {
    PafpInstance inst = load_instance_file(file);

    auto report = [&](bool yes, const std::optional<PathCertificate>& cert) {
        if (yes)
            out << "YES " << format_path(cert->vertices) << '\n';
        else
            out << "NO\n";
        return 0;
    };
    auto run_oracle = [&]() {
        OracleResult r = solve_exact(inst, budget);
        if (r.status == OracleStatus::BudgetExceeded) {
            err << "exhaustive search gave up after " << r.nodes_expanded
                << " nodes; raise --budget\n";
            return 3;
        }
        return report(r.status == OracleStatus::Yes, r.certificate);
    };

    if (algo == "oracle") return run_oracle();
    if (algo == "elw2") {
        Elw2Result r = solve_elw2(inst);
        return report(r.yes, r.certificate);
    }
    if (algo == "bfsw2k") {
        Bfsw2kResult r = solve_bfsw2k(inst, {max_k, threads});
        return report(r.yes, r.certificate);
    }

    // auto: cheapest structural solver that applies, exhaustive search last
    if (is_dag(inst.graph)) {
        ExactLengthProfile elp = exact_length_profile(inst.graph, inst.source);
        if (elp.width <= 2) {
            Elw2Result r = solve_elw2(inst);
            return report(r.yes, r.certificate);
        }
        LayerProfile prof = layer_profile(inst.graph, inst.source);
        if (prof.width <= 2 && static_cast<int>(prof.backward.size()) <= max_k) {
            Bfsw2kResult r = solve_bfsw2k(inst, {max_k, threads});
            return report(r.yes, r.certificate);
        }
    }
    return run_oracle();
}

int run_verify(const std::string& file, const std::string& path_text, bool as_json,
               std::ostream& out) {
    PafpInstance inst = load_instance_file(file);
    std::vector<Vertex> seq = parse_vertex_list(path_text);
    SafetyReport rep = check_path(inst, seq);
    if (as_json) {
        json j;
        j["is_path"] = rep.is_path;
        j["starts_at_source"] = rep.starts_at_source;
        j["ends_at_target"] = rep.ends_at_target;
        j["violated_pairs"] = json::array();
        for (auto [u, v] : rep.violated_pairs) j["violated_pairs"].push_back({u, v});
        j["verdict"] = to_string(rep.verdict);
        out << j.dump() << '\n';
        return 0;
    }
    out << to_string(rep.verdict);
    if (rep.verdict == Verdict::Unsafe)
        for (auto [u, v] : rep.violated_pairs) out << " {" << u << ',' << v << '}';
    out << '\n';
    return 0;
}

int run_measure(const std::string& file, bool as_json, std::ostream& out) {
    PafpInstance inst = load_instance_file(file);
    const bool dag = is_dag(inst.graph);
    LayerProfile input_prof = layer_profile(inst.graph, inst.source);
    Digraph h = union_digraph(inst);
    LayerProfile union_prof = layer_profile(h, inst.source);
    std::optional<int> elw;
    if (dag) elw = exact_length_profile(inst.graph, inst.source).width;

    if (as_json) {
        json j;
        j["is_dag"] = dag;
        j["n"] = inst.graph.vertex_count();
        j["m"] = inst.graph.arc_count();
        j["f"] = inst.pairs.size();
        j["bfsw_input"] = input_prof.width;
        if (elw) j["elw_input"] = *elw;
        j["backward_input"] = input_prof.backward.size();
        j["bfsw_union"] = union_prof.width;
        j["backward_union"] = union_prof.backward.size();
        j["reachable_count"] = input_prof.reachable_count();
        out << j.dump() << '\n';
        return 0;
    }
    out << "is_dag: " << (dag ? "true" : "false") << '\n';
    out << "n: " << inst.graph.vertex_count() << '\n';
    out << "m: " << inst.graph.arc_count() << '\n';
    out << "f: " << inst.pairs.size() << '\n';
    out << "bfsw_input: " << input_prof.width << '\n';
    if (elw) out << "elw_input: " << *elw << '\n';
    out << "backward_input: " << input_prof.backward.size() << '\n';
    out << "bfsw_union: " << union_prof.width << '\n';
    out << "backward_union: " << union_prof.backward.size() << '\n';
    out << "reachable_count: " << input_prof.reachable_count() << '\n';
    return 0;
}

int run_normalize(const std::string& file, const std::string& out_file,
                  const std::string& map_file, std::ostream& out) {
    PafpInstance inst = load_instance_file(file);
    NormalizedInstance norm = normalize(inst);
    write_text_output(serialize_instance(norm.instance), out_file, out);

    if (!map_file.empty()) {
        std::ostringstream map;
        map << "q " << norm.q << '\n';
        map << "start " << norm.instance.source << '\n';
        for (std::size_t i = 0; i < norm.reverse_listing.size(); ++i)
            map << "r " << i + 1 << ' ' << norm.reverse_listing[i] << '\n';
        for (std::size_t j = 0; j < norm.spine.size(); ++j)
            map << "p " << j + 1 << ' ' << norm.spine[j] << '\n';
        for (std::size_t i = 0; i < norm.detours.size(); ++i)
            map << "w " << i + 1 << ' ' << norm.detours[i] << '\n';
        for (Vertex v = 1; v <= norm.instance.graph.vertex_count(); ++v) {
            map << "lambda " << v << ' ';
            if (norm.level[static_cast<std::size_t>(v)])
                map << *norm.level[static_cast<std::size_t>(v)];
            else
                map << "inf";
            map << '\n';
        }
        write_text_output(map.str(), map_file, out);
    }
    return 0;
}

int run_decompose(const std::string& file, std::ostream& out) {
    PafpInstance inst = load_instance_file(file);
    PathDecomposition pd = build_bfs_bags(inst);
    for (std::size_t d = 0; d < pd.bags.size(); ++d)
        out << "bag " << d << ": " << format_path(pd.bags[d]) << '\n';
    out << "width: " << pd.width() << '\n';
    return 0;
}

int run_count_paths(const std::string& file, std::ostream& out) {
    PafpInstance inst = load_instance_file(file);
    out << count_paths(inst) << '\n';
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"path queries with forbidden pairs: solvers, rewrites, generators"};
    app.require_subcommand(1);

    // solve
    std::string solve_file, algo = "auto";
    int max_k = 24, threads = 1;
    long long budget = kDefaultOracleBudget;
    auto* solve_cmd = app.add_subcommand("solve", "decide an instance and print a witness");
    solve_cmd->add_option("file", solve_file, "instance file")->required();
    solve_cmd->add_option("--algo", algo, "auto, oracle, elw2 or bfsw2k")
        ->check(CLI::IsMember({"auto", "oracle", "elw2", "bfsw2k"}));
    solve_cmd->add_option("--max-k", max_k, "backward-arc cap for the subset sweep");
    solve_cmd->add_option("--budget", budget, "node budget for the exhaustive search");
    solve_cmd->add_option("--threads", threads, "worker threads for the subset sweep");

    // verify
    std::string verify_file, verify_path;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "classify a vertex sequence");
    verify_cmd->add_option("file", verify_file, "instance file")->required();
    verify_cmd->add_option("--path", verify_path, "whitespace-separated vertices")->required();
    verify_cmd->add_flag("--json", verify_json, "emit JSON");

    // measure
    std::string measure_file;
    bool measure_json = false;
    auto* measure_cmd = app.add_subcommand("measure", "report width and arc statistics");
    measure_cmd->add_option("file", measure_file, "instance file")->required();
    measure_cmd->add_flag("--json", measure_json, "emit JSON");

    // normalize
    std::string norm_file, norm_out, norm_map;
    auto* norm_cmd = app.add_subcommand("normalize", "rewrite into the width-2 form");
    norm_cmd->add_option("file", norm_file, "instance file")->required();
    norm_cmd->add_option("-o,--output", norm_out, "write the rewritten instance here");
    norm_cmd->add_option("--map", norm_map, "write the vertex/level map here");

    // decompose
    std::string decomp_file;
    auto* decomp_cmd = app.add_subcommand("decompose", "print layer-based path decomposition bags");
    decomp_cmd->add_option("file", decomp_file, "instance file")->required();

    // count-paths
    std::string count_file;
    auto* count_cmd = app.add_subcommand("count-paths", "count source-to-target paths");
    count_cmd->add_option("file", count_file, "instance file")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate instance families");
    gen_cmd->require_subcommand(1);
    std::string gen_out;
    std::string gmo_cnf;
    auto* gmo_cmd = gen_cmd->add_subcommand("gmo", "satisfiability-derived instance from a DIMACS cnf");
    gmo_cmd->add_option("cnf", gmo_cnf, "DIMACS cnf file")->required();
    gmo_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");
    int ladder_len = 0;
    double ladder_density = -1.0;
    std::uint64_t gen_seed = 0;
    auto* ladder_cmd = gen_cmd->add_subcommand("ladder", "layered two-vertex-wide instance");
    ladder_cmd->add_option("--len", ladder_len, "number of hops from source to target")->required();
    ladder_cmd->add_option("--density", ladder_density, "arc retention probability in (0, 1]");
    ladder_cmd->add_option("--seed", gen_seed, "rng seed");
    ladder_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");
    int backward_len = 0, backward_k = 0;
    auto* backward_cmd = gen_cmd->add_subcommand("backward", "ladder with injected backward arcs");
    backward_cmd->add_option("--len", backward_len, "number of hops from source to target")->required();
    backward_cmd->add_option("--k", backward_k, "backward arcs to inject")->required();
    backward_cmd->add_option("--seed", gen_seed, "rng seed");
    backward_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("pafp");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_file, algo, max_k, budget, threads, out, err);
        if (verify_cmd->parsed()) return run_verify(verify_file, verify_path, verify_json, out);
        if (measure_cmd->parsed()) return run_measure(measure_file, measure_json, out);
        if (norm_cmd->parsed()) return run_normalize(norm_file, norm_out, norm_map, out);
        if (decomp_cmd->parsed()) return run_decompose(decomp_file, out);
        if (count_cmd->parsed()) return run_count_paths(count_file, out);
        if (gen_cmd->parsed()) {
            PafpInstance inst;
            if (gmo_cmd->parsed())
                inst = gen_gmo(parse_dimacs_cnf(read_file(gmo_cnf)));
            else if (ladder_cmd->parsed())
                inst = gen_ladder(ladder_len,
                                  ladder_density < 0 ? std::nullopt : std::optional<double>(ladder_density),
                                  gen_seed);
            else
                inst = gen_backward_augmented(backward_len, backward_k, gen_seed);
            write_text_output(serialize_instance(inst), gen_out, out);
            return 0;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace pafp::cli
