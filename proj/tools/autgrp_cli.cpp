#include <glob.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "autgrp/dimacs.hpp"
#include "autgrp/oracle.hpp"
#include "autgrp/solver.hpp"

using json = nlohmann::json;
using namespace autgrp;

namespace {

struct CommonSolveFlags {
    std::string input;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    double error = 0.01;
    uint64_t seed = 0;
    bool seed_set = false;
    bool permute = false;
    std::string format = "human";
    std::string selector = "first_largest";
    int deviation_k = 5;
    int extra_targets = 8;
    bool no_base_aligned = false;
    bool no_deviation_sets = false;
    bool no_prubw = false;
};

void add_solver_flags(CLI::App* cmd, CommonSolveFlags& f) {
    cmd->add_option("--input", f.input, "input graph (DIMACS)")->required();
    cmd->add_option("--threads", f.threads, "worker threads");
    cmd->add_option("--error", f.error, "error bound epsilon")
        ->check(CLI::Range(1e-12, 0.999999));
    cmd->add_option("--seed", f.seed, "random seed (default: entropy)")
        ->each([&f](const std::string&) { f.seed_set = true; });
    cmd->add_flag("--permute", f.permute, "randomly relabel the input first");
    cmd->add_option("--format", f.format, "human|jsonl")
        ->check(CLI::IsMember({"human", "jsonl"}));
    cmd->add_option("--selector", f.selector, "cell selector policy")
        ->check(CLI::IsMember({"first_largest", "first_smallest", "first"}));
    cmd->add_option("--deviation-k", f.deviation_k, "deviation extension cells");
    cmd->add_option("--extra-targets", f.extra_targets, "stored extra target leaves");
    cmd->add_flag("--no-base-aligned", f.no_base_aligned, "disable base-aligned search");
    cmd->add_flag("--no-deviation-sets", f.no_deviation_sets,
                  "disable trace deviation sets");
    cmd->add_flag("--no-prubw", f.no_prubw, "disable automorphism pruning");
}

SolveOptions to_options(const CommonSolveFlags& f) {
    SolveOptions o;
    o.epsilon = f.error;
    o.threads = std::max(1, f.threads);
    if (f.seed_set) {
        o.seed = f.seed;
    } else {
        std::random_device rd;
        o.seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    }
    if (f.selector == "first_smallest") o.selector = SelectorPolicy::first_smallest;
    else if (f.selector == "first") o.selector = SelectorPolicy::first;
    o.deviation_k = f.deviation_k;
    o.extra_target_cap = f.extra_targets;
    o.use_base_aligned = !f.no_base_aligned;
    o.use_deviation_sets = !f.no_deviation_sets;
    o.use_prubw = !f.no_prubw;
    return o;
}

int cmd_solve(const CommonSolveFlags& flags) {
    ColoredGraph g;
    try {
        g = load_dimacs(flags.input);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    SolveOptions opts = to_options(flags);
    if (flags.permute) {
        Rng prng(opts.seed, 0xfeed);
        std::vector<int> image(g.n());
        for (int v = 0; v < g.n(); ++v) image[v] = v;
        for (int v = g.n() - 1; v > 0; --v)
            std::swap(image[v], image[prng.below(v + 1)]);
        g = permute_graph(g, Permutation(image));
    }

    auto t0 = std::chrono::steady_clock::now();
    SolverResult res = solve(g, opts);
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();

    json rec;
    rec["input"] = flags.input;
    rec["n"] = g.n();
    rec["m"] = g.m();
    rec["group_order"] = res.group_order.str();
    rec["generator_count"] = res.generators.size();
    json gens = json::array();
    for (const auto& p : res.generators) gens.push_back(p.to_cycles());
    rec["generators"] = gens;
    rec["termination"] =
        res.termination == Termination::deterministic ? "deterministic"
                                                      : "probabilistic";
    rec["error_bound"] = res.epsilon;
    rec["threads"] = opts.threads;
    rec["seed"] = opts.seed;
    rec["wall_ms"] = wall_ms;
    rec["base_aligned_ms"] = res.stats.base_aligned_ms;
    rec["bfs_ms"] = res.stats.bfs_ms;
    rec["level_search_ms"] = res.stats.level_search_ms;
    rec["walks"] = res.stats.walks;
    rec["nodes_expanded"] = res.stats.nodes_expanded;

    if (flags.format == "jsonl") {
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "input:           " << flags.input << "\n"
                  << "n, m:            " << g.n() << ", " << g.m() << "\n"
                  << "group order:     " << res.group_order.str() << "\n"
                  << "generators:      " << res.generators.size() << "\n";
        for (const auto& p : res.generators)
            std::cout << "  " << p.to_cycles() << "\n";
        std::cout << "termination:     " << rec["termination"].get<std::string>()
                  << " (error bound " << res.epsilon << ")\n"
                  << "threads:         " << opts.threads << "\n"
                  << "seed:            " << opts.seed << "\n"
                  << "wall ms:         " << wall_ms << "\n"
                  << "phase ms:        base-aligned " << res.stats.base_aligned_ms
                  << ", bfs " << res.stats.bfs_ms << ", level-search "
                  << res.stats.level_search_ms << "\n"
                  << "walks:           " << res.stats.walks << "\n"
                  << "nodes expanded:  " << res.stats.nodes_expanded << "\n";
    }
    return 0;
}

struct BenchRow {
    std::string graph;
    int n;
    long long m;
    int threads;
    int repeat;
    double wall_ms;
    std::string order;
    bool terminated;
};

// Runs one solve in a child process so a timeout can kill it cleanly.
bool run_solve_child(const std::string& path, const SolveOptions& opts,
                     double timeout_sec, double& wall_ms, std::string& order) {
    int fds[2];
    if (pipe(fds) != 0) return false;
    pid_t pid = fork();
    if (pid == 0) {
        close(fds[0]);
        try {
            ColoredGraph g = load_dimacs(path);
            auto t0 = std::chrono::steady_clock::now();
            SolverResult res = solve(g, opts);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            std::string line = std::to_string(ms) + " " + res.group_order.str();
            (void)!write(fds[1], line.data(), line.size());
        } catch (...) {
        }
        close(fds[1]);
        _exit(0);
    }
    close(fds[1]);
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration<double>(timeout_sec);
    int status = 0;
    bool done = false;
    while (std::chrono::steady_clock::now() < deadline) {
        pid_t r = waitpid(pid, &status, WNOHANG);
        if (r == pid) { done = true; break; }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    if (!done) {
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        close(fds[0]);
        return false;
    }
    char buf[256];
    ssize_t len = read(fds[0], buf, sizeof(buf) - 1);
    close(fds[0]);
    if (len <= 0) return false;
    buf[len] = '\0';
    std::istringstream iss(buf);
    iss >> wall_ms >> order;
    return static_cast<bool>(iss);
}

int cmd_bench(const std::string& inputs_glob, const std::string& threads_list,
              int repeats, double timeout_sec, uint64_t seed) {
    glob_t gl{};
    std::vector<std::string> files;
    if (glob(inputs_glob.c_str(), 0, nullptr, &gl) == 0) {
        for (size_t i = 0; i < gl.gl_pathc; ++i) files.push_back(gl.gl_pathv[i]);
    }
    globfree(&gl);
    if (files.empty()) {
        std::cerr << "no inputs match '" << inputs_glob << "'\n";
        return 3;
    }
    std::vector<int> thread_counts;
    std::istringstream tl(threads_list);
    for (std::string part; std::getline(tl, part, ',');)
        thread_counts.push_back(std::stoi(part));
    if (thread_counts.empty()) {
        std::cerr << "empty --threads-list\n";
        return 3;
    }

    std::cout << "# autgrp bench csv v1\n";
    std::cout << "graph,n,m,threads,repeat,wall_ms,order,terminated\n";
    std::vector<BenchRow> rows;
    for (const auto& file : files) {
        ColoredGraph g;
        try {
            g = load_dimacs(file);
        } catch (const std::exception& e) {
            std::cerr << "skipping " << file << ": " << e.what() << "\n";
            continue;
        }
        for (int tc : thread_counts) {
            for (int rep = 0; rep < repeats; ++rep) {
                SolveOptions opts;
                opts.threads = tc;
                opts.seed = seed + static_cast<uint64_t>(rep);
                double wall = 0;
                std::string order = "0";
                bool ok = run_solve_child(file, opts, timeout_sec, wall, order);
                BenchRow row{file, g.n(), g.m(), tc, rep,
                             ok ? wall : timeout_sec * 1000.0, order, ok};
                rows.push_back(row);
                std::cout << row.graph << ',' << row.n << ',' << row.m << ','
                          << row.threads << ',' << row.repeat << ',' << row.wall_ms
                          << ',' << row.order << ','
                          << (row.terminated ? "yes" : "censored") << "\n";
            }
        }
    }
    // Relative-runtime summary: median over repeats, normalized to threads=1.
    for (const auto& file : files) {
        auto median_for = [&](int tc) -> double {
            std::vector<double> vals;
            for (const auto& r : rows)
                if (r.graph == file && r.threads == tc && r.terminated)
                    vals.push_back(r.wall_ms);
            if (vals.empty()) return -1;
            std::sort(vals.begin(), vals.end());
            return vals[vals.size() / 2];
        };
        double base = median_for(1);
        for (int tc : thread_counts) {
            double med = median_for(tc);
            std::cout << "# relative," << file << ',' << tc << ',';
            if (base > 0 && med > 0)
                std::cout << med / base << "\n";
            else
                std::cout << "censored\n";
        }
    }
    return 0;
}

int cmd_certify(const std::string& input, const std::string& generators_path) {
    ColoredGraph g;
    try {
        g = load_dimacs(input);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    std::ifstream gens(generators_path);
    if (!gens) {
        std::cerr << "cannot open " << generators_path << "\n";
        return 2;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(gens, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        Permutation phi;
        try {
            phi = Permutation::from_cycles(line, g.n());
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": malformed permutation: " << e.what()
                      << "\n";
            return 2;
        }
        if (!is_automorphism(g, phi)) {
            std::cout << "not an automorphism: " << phi.to_cycles() << " (line "
                      << lineno << ")\n";
            return 1;
        }
    }
    std::cout << "all generators certified\n";
    return 0;
}

int cmd_oracle(const std::string& input) {
    ColoredGraph g;
    try {
        g = load_dimacs(input);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    try {
        OracleGroup grp = brute_force_automorphisms(g);
        std::cout << grp.order() << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel randomized graph automorphism solver"};
    app.require_subcommand(1);

    CommonSolveFlags solve_flags;
    CLI::App* solve_cmd = app.add_subcommand("solve", "compute Aut(G) generators");
    add_solver_flags(solve_cmd, solve_flags);

    std::string bench_glob, bench_threads = "1";
    int bench_repeats = 3;
    double bench_timeout = 60.0;
    uint64_t bench_seed = 1;
    CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark harness (CSV)");
    bench_cmd->add_option("--inputs", bench_glob, "input glob")->required();
    bench_cmd->add_option("--threads-list", bench_threads, "e.g. 1,2,4,8");
    bench_cmd->add_option("--repeats", bench_repeats, "repeats per configuration");
    bench_cmd->add_option("--timeout", bench_timeout, "seconds per run");
    bench_cmd->add_option("--seed", bench_seed, "base seed");

    std::string certify_input, certify_generators;
    CLI::App* certify_cmd = app.add_subcommand("certify", "check generator files");
    certify_cmd->add_option("--input", certify_input, "input graph")->required();
    certify_cmd->add_option("--generators", certify_generators,
                            "file of cycle-notation permutations")
        ->required();

    std::string oracle_input;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force group order (n <= 10)");
    oracle_cmd->add_option("--input", oracle_input, "input graph")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    if (solve_cmd->parsed()) return cmd_solve(solve_flags);
    if (bench_cmd->parsed())
        return cmd_bench(bench_glob, bench_threads, bench_repeats, bench_timeout,
                         bench_seed);
    if (certify_cmd->parsed()) return cmd_certify(certify_input, certify_generators);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_input);
    return 3;
}
