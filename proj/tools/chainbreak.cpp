// Copyright 2026 The chainbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "chainbreak/bench.hpp"
#include "chainbreak/chimera.hpp"
#include "chainbreak/decode.hpp"
#include "chainbreak/embedded.hpp"
#include "chainbreak/error.hpp"
#include "chainbreak/io.hpp"
#include "chainbreak/parallel.hpp"
#include "chainbreak/portfolio.hpp"
#include "chainbreak/rng.hpp"
#include "chainbreak/sampler.hpp"

namespace fs = std::filesystem;
using namespace chainbreak;

namespace {

ChimeraGraph parse_chimera(const std::string &spec) {
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto end = spec.find('x', start);
        dims.push_back(std::stoull(spec.substr(start, end - start)));
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    if (dims.size() == 2)
        dims.push_back(4);
    if (dims.size() != 3)
        throw ConfigError(fmt::format("chimera shape '{}' must be MxN or MxNxL", spec));
    return ChimeraGraph(dims[0], dims[1], dims[2]);
}

void parse_beta(const std::string &range, AnnealSchedule &schedule) {
    const auto colon = range.find(':');
    if (colon == std::string::npos)
        throw ConfigError(fmt::format("beta range '{}' must be START:END", range));
    schedule.beta_start = std::stod(range.substr(0, colon));
    schedule.beta_end = std::stod(range.substr(colon + 1));
}

struct GenerateArgs {
    std::vector<std::size_t> assets{2};
    std::size_t granularity = 4;
    double budget = 1.0;
    std::vector<double> theta{1.0, 10.0, 1.0};
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    std::size_t price_points = 20;
    double volatility = 0.25;
    bool skip_ground = false;
    std::string out;
};

int run_generate(const GenerateArgs &args) {
    if (args.theta.size() != 3)
        throw ConfigError("--theta takes three comma-separated values");
    fs::create_directories(args.out);
    std::string j_csv = "n,problem,i,j,value\n";
    io::json sizes = io::json::array();
    for (std::size_t m : args.assets) {
        SuiteConfig cfg;
        cfg.assets = m;
        cfg.granularity = args.granularity;
        cfg.budget = args.budget;
        cfg.theta = {args.theta[0], args.theta[1], args.theta[2]};
        cfg.price_points = args.price_points;
        cfg.volatility = args.volatility;
        cfg.seed = mix_seed(args.seed, m);
        cfg.validate();
        const std::size_t n = cfg.variables();
        for (std::size_t i = 0; i < args.count; ++i) {
            const IsingModel model = generate_instance(cfg, i);
            const std::string id = fmt::format("problem_n{}_{:05}", n, i);
            std::optional<GroundStateReport> ground;
            if (!args.skip_ground)
                ground = brute_force_solve(model);
            io::write_json(fs::path(args.out) / (id + ".json"),
                           io::problem_to_json(model, ground ? &*ground : nullptr));
            for (const auto &[key, value] : model.J())
                j_csv += fmt::format("{},{},{},{},{}\n", n, id, key.first, key.second, value);
        }
        sizes.push_back({{"n", n}, {"config", io::suite_config_to_json(cfg)}});
    }
    io::write_text(fs::path(args.out) / "j_values.csv", j_csv);
    io::write_json(fs::path(args.out) / "manifest.json",
                   {{"format_version", io::kFormatVersion},
                    {"count", args.count},
                    {"seed", args.seed},
                    {"seed_rule", "size seed = mix_seed(seed, m); instance seed = mix_seed(size seed, index)"},
                    {"sizes", sizes}});
    std::cout << fmt::format("wrote {} problem(s) per size to {}\n", args.count, args.out);
    return 0;
}

struct EmbedArgs {
    std::string problem;
    std::string chimera = "16x16x4";
    double k = -1.0;
    std::vector<std::size_t> offset{0, 0};
    std::string out;
    std::string embedding_out;
};

int run_embed(const EmbedArgs &args) {
    const auto problem = io::problem_from_json(io::read_json(args.problem));
    if (args.offset.size() != 2)
        throw ConfigError("--offset takes ROW,COL");
    const Embedding embedding = clique_embed(problem.model.size(), parse_chimera(args.chimera),
                                             {args.offset[0], args.offset[1]});
    const EmbeddedModel model = embed_model(problem.model, embedding, args.k);
    io::write_json(args.out, io::embedded_to_json(model));
    if (!args.embedding_out.empty())
        io::write_json(args.embedding_out, io::embedding_to_json(embedding));
    std::cout << fmt::format("embedded {} spins on {} qubits ({} intra-chain couplers)\n",
                             problem.model.size(), model.num_qubits(), model.intra_edge_count());
    return 0;
}

struct SampleArgs {
    std::string embedded;
    std::size_t n = 1000;
    std::size_t sweeps = 0;
    std::string beta = "0.1:10";
    std::size_t restarts = 1;
    double flip_p = 0.0;
    std::uint64_t seed = 0;
    unsigned threads = default_thread_count();
    std::string out;
};

int run_sample(const SampleArgs &args) {
    const EmbeddedModel model = io::embedded_from_json(io::read_json(args.embedded));
    AnnealSchedule schedule;
    schedule.sweeps = args.sweeps;
    schedule.restarts = args.restarts;
    parse_beta(args.beta, schedule);
    NoiseConfig noise{args.flip_p};
    const PhysicalSampleSet samples = sample(model, args.n, schedule, noise, args.seed, args.threads);
    io::write_samples(args.out, samples);
    std::cout << fmt::format("wrote {} samples over {} qubits to {}\n", samples.size(),
                             samples.qubits.size(), args.out);
    return 0;
}

struct DecodeArgs {
    std::string samples;
    std::string embedding;
    std::string strategy = "majority";
    std::string profile;
    std::string out;
};

int run_decode(const DecodeArgs &args) {
    const PhysicalSampleSet samples = io::read_samples(args.samples);
    const Embedding embedding = io::embedding_from_json(io::read_json(args.embedding));
    const ChainLayout layout(embedding, samples.qubits);
    const Strategy strategy = parse_strategy(args.strategy);
    std::optional<FaultProfile> profile;
    if (!args.profile.empty()) {
        profile = io::read_profile(args.profile);
        if (!profile->covers(layout))
            throw DataError("fault profile does not match the embedding's chains");
    }
    const auto decoded =
        decode_samples(samples.samples, layout, strategy, profile ? &*profile : nullptr);
    io::write_decoded(args.out, decoded);
    std::size_t discarded = 0;
    for (const auto &s : decoded.samples)
        discarded += s.discarded();
    std::cout << fmt::format("decoded {} samples with {} ({} discarded)\n", decoded.samples.size(),
                             args.strategy, discarded);
    return 0;
}

struct ProfileArgs {
    std::string samples;
    std::string embedding;
    std::string problem;
    std::string out;
};

int run_profile(const ProfileArgs &args) {
    const PhysicalSampleSet samples = io::read_samples(args.samples);
    const Embedding embedding = io::embedding_from_json(io::read_json(args.embedding));
    const ChainLayout layout(embedding, samples.qubits);
    const auto problem = io::problem_from_json(io::read_json(args.problem));
    const GroundStateReport ground =
        problem.ground ? *problem.ground : brute_force_solve(problem.model);
    const auto profile = estimate_fault_profile(samples.samples, layout, ground);
    if (!profile) {
        std::cerr << "no sample has a broken chain; no profile written\n";
        return 3;
    }
    io::write_profile(args.out, *profile);
    std::cout << fmt::format("profile from {} broken samples written to {}\n",
                             profile->broken_samples(), args.out);
    return 0;
}

struct SweepArgs {
    std::string suite;
    std::vector<double> k{0.0, -0.25, -0.5, -1.0, -1.5, -2.0};
    std::vector<std::string> strategies{"discard", "majority", "weighted"};
    std::size_t problems = 50;
    std::size_t samples = 500;
    std::size_t sweeps = 0;
    std::string beta = "0.1:10";
    double flip_p = 0.0;
    std::uint64_t seed = 0;
    unsigned threads = default_thread_count();
    bool full = false;
    bool resume = false;
    std::string chimera = "16x16x4";
    std::string out;
};

int run_bench_sweep(const SweepArgs &args) {
    SweepConfig cfg;
    cfg.k_values = args.k;
    cfg.strategies.clear();
    for (const auto &name : args.strategies)
        cfg.strategies.push_back(parse_strategy(name));
    cfg.problems = args.full ? 1000 : args.problems;
    cfg.samples = args.full ? 1000 : args.samples;
    cfg.schedule.sweeps = args.sweeps;
    parse_beta(args.beta, cfg.schedule);
    cfg.noise.readout_flip_p = args.flip_p;
    cfg.seed = args.seed;
    cfg.threads = args.threads;
    const ChimeraGraph graph = parse_chimera(args.chimera);
    cfg.chimera_rows = graph.rows();
    cfg.chimera_cols = graph.cols();
    cfg.chimera_shore = graph.shore_size();
    if (args.resume)
        cfg.checkpoint_dir = fs::path(args.out) / "cells";

    const auto suite = io::load_suite(args.suite);
    const SweepResult result = run_sweep(suite, cfg);
    write_sweep_outputs(result, cfg, args.out);
    for (const auto &e : result.errors)
        std::cerr << "error: " << e << "\n";
    std::cout << fmt::format("{} cells written to {} ({} resumed)\n", result.cells.size(), args.out,
                             result.resumed_cells);
    return result.complete() ? 0 : 2;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Chain-break benchmarking for clique-embedded Ising problems"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Generate a portfolio problem suite");
    generate->add_option("--m", gen.assets, "Asset counts (comma separated)")->delimiter(',');
    generate->add_option("--w", gen.granularity, "Bits per asset");
    generate->add_option("--b", gen.budget, "Budget");
    generate->add_option("--theta", gen.theta, "Objective weights t1,t2,t3")->delimiter(',');
    generate->add_option("--count", gen.count, "Problems per size");
    generate->add_option("--seed", gen.seed, "Suite seed");
    generate->add_option("--price-points", gen.price_points, "Price points per asset");
    generate->add_option("--volatility", gen.volatility, "Max fractional price step");
    generate->add_flag("--no-ground", gen.skip_ground, "Skip exhaustive ground-state solve");
    generate->add_option("--out", gen.out, "Output directory")->required();

    EmbedArgs emb;
    auto *embed = app.add_subcommand("embed", "Clique-embed a problem on Chimera");
    embed->add_option("--problem", emb.problem, "Problem JSON")->required();
    embed->add_option("--chimera", emb.chimera, "Lattice MxNxL");
    embed->add_option("--k", emb.k, "Chain strength")->required();
    embed->add_option("--offset", emb.offset, "Top-left cell ROW,COL")->delimiter(',');
    embed->add_option("--out", emb.out, "Embedded model JSON")->required();
    embed->add_option("--embedding-out", emb.embedding_out, "Standalone embedding JSON");

    SampleArgs smp;
    auto *sample_cmd = app.add_subcommand("sample", "Simulated-annealing samples of an embedded model");
    sample_cmd->add_option("--embedded", smp.embedded, "Embedded model JSON")->required();
    sample_cmd->add_option("--n", smp.n, "Number of samples");
    sample_cmd->add_option("--sweeps", smp.sweeps, "Sweeps per sample (0: 100 per qubit)");
    sample_cmd->add_option("--beta", smp.beta, "Inverse temperature range START:END");
    sample_cmd->add_option("--restarts", smp.restarts, "Annealing runs per sample");
    sample_cmd->add_option("--flip-p", smp.flip_p, "Readout flip probability");
    sample_cmd->add_option("--seed", smp.seed, "Sampler seed");
    sample_cmd->add_option("--threads", smp.threads, "Worker threads");
    sample_cmd->add_option("--out", smp.out, "Sample CSV")->required();

    DecodeArgs dec;
    auto *decode = app.add_subcommand(
        "decode",
        "Decode physical samples to logical states. The weighted strategy needs a fault "
        "profile, which is estimated against known ground states; it is a benchmarking "
        "diagnostic, not a blind solver.");
    decode->add_option("--samples", dec.samples, "Sample CSV")->required();
    decode->add_option("--embedding", dec.embedding, "Embedding or embedded model JSON")->required();
    decode->add_option("--strategy", dec.strategy, "discard|majority|weighted")
        ->check(CLI::IsMember({"discard", "majority", "weighted"}));
    decode->add_option("--profile", dec.profile, "Fault profile CSV");
    decode->add_option("--out", dec.out, "Decoded CSV")->required();

    ProfileArgs prof;
    auto *profile = app.add_subcommand(
        "profile", "Estimate per-position fault probabilities from broken samples");
    profile->add_option("--samples", prof.samples, "Sample CSV")->required();
    profile->add_option("--embedding", prof.embedding, "Embedding or embedded model JSON")->required();
    profile->add_option("--problem", prof.problem, "Problem JSON (ground state solved if absent)")
        ->required();
    profile->add_option("--out", prof.out, "Profile CSV")->required();

    SweepArgs swp;
    auto *bench = app.add_subcommand("bench", "Benchmark harness");
    bench->require_subcommand(1);
    auto *sweep = bench->add_subcommand("sweep", "Sweep chain strength over a problem suite");
    sweep->add_option("--suite", swp.suite, "Suite directory")->required();
    sweep->add_option("--k", swp.k, "Chain strengths")->delimiter(',');
    sweep->add_option("--strategies", swp.strategies, "Decoding strategies")->delimiter(',');
    sweep->add_option("--problems", swp.problems, "Problems per size");
    sweep->add_option("--samples", swp.samples, "Samples per problem and k");
    sweep->add_option("--sweeps", swp.sweeps, "Sweeps per sample (0: 100 per qubit)");
    sweep->add_option("--beta", swp.beta, "Inverse temperature range START:END");
    sweep->add_option("--flip-p", swp.flip_p, "Readout flip probability");
    sweep->add_option("--seed", swp.seed, "Sweep seed");
    sweep->add_option("--threads", swp.threads, "Worker threads");
    sweep->add_option("--chimera", swp.chimera, "Lattice MxNxL");
    sweep->add_flag("--full", swp.full, "1000 problems x 1000 samples per cell");
    sweep->add_flag("--resume", swp.resume, "Checkpoint cells under OUT/cells and reuse them");
    sweep->add_option("--out", swp.out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed())
            return run_generate(gen);
        if (embed->parsed())
            return run_embed(emb);
        if (sample_cmd->parsed())
            return run_sample(smp);
        if (decode->parsed())
            return run_decode(dec);
        if (profile->parsed())
            return run_profile(prof);
        if (sweep->parsed())
            return run_bench_sweep(swp);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
