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

#include "chainbreak/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <fmt/core.h>

#include "chainbreak/chimera.hpp"
#include "chainbreak/embedded.hpp"
#include "chainbreak/error.hpp"
#include "chainbreak/io.hpp"
#include "chainbreak/rng.hpp"

namespace chainbreak {

ProblemResult score(const DecodedSampleSet &decoded, const IsingModel &logical,
                    const GroundStateReport &ground, std::string id) {
    ProblemResult out;
    out.id = std::move(id);
    out.chain_count = decoded.chain_count;
    const std::size_t count = decoded.samples.size();
    out.success.reserve(count);
    out.broken.reserve(count);
    out.broken_chains.reserve(count);
    for (const auto &sample : decoded.samples) {
        const bool hit = sample.state.has_value()
                         && std::abs(energy_ising(logical, *sample.state) - ground.energy)
                                <= kEnergyTolerance;
        out.success.push_back(hit);
        out.broken.push_back(sample.broken_chains > 0);
        out.broken_chains.push_back(sample.broken_chains);
    }
    return out;
}

namespace {

void require_samples(const ProblemResult &result) {
    if (result.num_samples() == 0)
        throw DataError(fmt::format("problem '{}' has no samples", result.id));
}

template <typename T>
double mean_of(const std::vector<T> &values) {
    double sum = 0.0;
    for (T v : values)
        sum += static_cast<double>(v);
    return sum / static_cast<double>(values.size());
}

}  // namespace

double prob_success(const ProblemResult &result) {
    require_samples(result);
    return mean_of(result.success);
}

double prob_broken(const ProblemResult &result) {
    require_samples(result);
    return mean_of(result.broken);
}

double ratio_broken(const ProblemResult &result) {
    require_samples(result);
    if (result.chain_count == 0)
        throw DataError(fmt::format("problem '{}' has no chains", result.id));
    return mean_of(result.broken_chains) / static_cast<double>(result.chain_count);
}

SuiteAverages aggregate(std::span<const ProblemResult> results) {
    if (results.empty())
        throw DataError("cannot aggregate an empty problem set");
    SuiteAverages out;
    for (const auto &r : results) {
        out.p_s += prob_success(r);
        out.p_b += prob_broken(r);
        out.r_b += ratio_broken(r);
    }
    const auto count = static_cast<double>(results.size());
    out.p_s /= count;
    out.p_b /= count;
    out.r_b /= count;
    out.problems = results.size();
    return out;
}

bool greater_with_confidence(double rate_a, std::size_t n_a, double rate_b, std::size_t n_b,
                             double z) {
    if (n_a == 0 || n_b == 0)
        return false;
    const double variance = rate_a * (1.0 - rate_a) / static_cast<double>(n_a)
                            + rate_b * (1.0 - rate_b) / static_cast<double>(n_b);
    const double gap = rate_a - rate_b;
    if (variance == 0.0)
        return gap > 0.0;
    return gap / std::sqrt(variance) > z;
}

void SweepConfig::validate() const {
    if (k_values.empty())
        throw ConfigError("sweep needs at least one chain strength");
    if (strategies.empty())
        throw ConfigError("sweep needs at least one strategy");
    if (problems == 0 || samples == 0)
        throw ConfigError("sweep needs at least one problem and one sample");
    if (schedule.sweeps != 0)
        schedule.validate();
    noise.validate();
}

const SweepCell *SweepResult::find(std::size_t n, double k, Strategy strategy) const {
    for (const auto &cell : cells)
        if (cell.n == n && cell.k == k && cell.strategy == strategy)
            return &cell;
    return nullptr;
}

const CellProfile *SweepResult::profile(std::size_t n, double k) const {
    for (const auto &p : profiles)
        if (p.n == n && p.k == k)
            return &p;
    return nullptr;
}

std::string heatmap_filename(std::size_t n, double k) {
    return fmt::format("heatmap_n{}_k{}.csv", n, k);
}

namespace {

struct CellOutcome {
    std::vector<SweepCell> cells;
    CellProfile profile;
    std::vector<std::vector<std::size_t>> faults;
};

io::json cell_to_json(const CellOutcome &outcome, const std::string &fingerprint) {
    io::json j;
    j["fingerprint"] = fingerprint;
    j["broken_samples"] = outcome.profile.profile ? outcome.profile.profile->broken_samples() : 0;
    j["faults"] = outcome.faults;
    io::json rows = io::json::array();
    for (const auto &c : outcome.cells)
        rows.push_back({{"strategy", to_string(c.strategy)},
                        {"p_s", c.p_s},
                        {"p_b", c.p_b},
                        {"r_b", c.r_b},
                        {"n_problems", c.n_problems},
                        {"n_samples", c.n_samples}});
    j["cells"] = rows;
    return j;
}

std::optional<CellOutcome> cell_from_json(const io::json &j, const std::string &fingerprint,
                                          std::size_t n, double k) {
    if (j.value("fingerprint", std::string{}) != fingerprint)
        return std::nullopt;
    CellOutcome out;
    for (const auto &row : j.at("cells")) {
        SweepCell c;
        c.n = n;
        c.k = k;
        c.strategy = parse_strategy(row.at("strategy").get<std::string>());
        c.p_s = row.at("p_s").get<double>();
        c.p_b = row.at("p_b").get<double>();
        c.r_b = row.at("r_b").get<double>();
        c.n_problems = row.at("n_problems").get<std::size_t>();
        c.n_samples = row.at("n_samples").get<std::size_t>();
        out.cells.push_back(c);
    }
    out.faults = j.at("faults").get<std::vector<std::vector<std::size_t>>>();
    const auto broken = j.at("broken_samples").get<std::size_t>();
    out.profile.n = n;
    out.profile.k = k;
    if (broken > 0) {
        std::vector<std::vector<double>> p(out.faults.size());
        for (std::size_t i = 0; i < out.faults.size(); ++i)
            for (std::size_t count : out.faults[i])
                p[i].push_back(static_cast<double>(count) / static_cast<double>(broken));
        out.profile.profile = FaultProfile(std::move(p), broken);
    }
    return out;
}

std::filesystem::path checkpoint_path(const std::filesystem::path &dir, std::size_t n, double k) {
    return dir / fmt::format("cell_n{}_k{}.json", n, k);
}

struct ScoredProblem {
    const SuiteProblem *problem;
    GroundStateReport ground;
};

CellOutcome run_cell(std::span<const ScoredProblem> problems, const Embedding &embedding,
                     std::size_t n, double k, const SweepConfig &config) {
    const std::uint64_t size_seed = mix_seed(config.seed, n);
    std::vector<PhysicalSampleSet> samples;
    samples.reserve(problems.size());
    std::optional<ChainLayout> layout;
    std::vector<EmbeddedModel> models;
    models.reserve(problems.size());
    for (std::size_t p = 0; p < problems.size(); ++p) {
        models.push_back(embed_model(problems[p].problem->model, embedding, k));
        samples.push_back(sample(models.back(), config.samples, config.schedule, config.noise,
                                 mix_seed(size_seed, p), config.threads));
        if (!layout)
            layout.emplace(models.back());
    }

    FaultTally tally(*layout);
    for (std::size_t p = 0; p < problems.size(); ++p)
        tally.add(samples[p].samples, problems[p].ground);

    CellOutcome out;
    out.profile.n = n;
    out.profile.k = k;
    out.profile.profile = tally.profile();
    out.faults = tally.faults();
    const FaultProfile *profile = out.profile.profile ? &*out.profile.profile : nullptr;

    for (Strategy strategy : config.strategies) {
        std::vector<ProblemResult> results;
        results.reserve(problems.size());
        for (std::size_t p = 0; p < problems.size(); ++p) {
            const auto decoded = decode_samples(samples[p].samples, *layout, strategy, profile);
            results.push_back(score(decoded, problems[p].problem->model, problems[p].ground,
                                    problems[p].problem->id));
        }
        const SuiteAverages avg = aggregate(results);
        out.cells.push_back({n, k, strategy, avg.p_s, avg.p_b, avg.r_b, avg.problems,
                             config.samples});
    }
    return out;
}

}  // namespace

SweepResult run_sweep(std::span<const SuiteProblem> suite, const SweepConfig &config) {
    config.validate();
    if (suite.empty())
        throw ConfigError("sweep needs a nonempty suite");

    std::map<std::size_t, std::vector<const SuiteProblem *>> by_size;
    for (const auto &problem : suite)
        by_size[problem.model.size()].push_back(&problem);

    const ChimeraGraph graph(config.chimera_rows, config.chimera_cols, config.chimera_shore);
    SweepResult result;

    for (auto &[n, members] : by_size) {
        result.sizes.push_back(n);
        if (members.size() > config.problems)
            members.resize(config.problems);

        std::optional<Embedding> embedding;
        try {
            embedding = clique_embed(n, graph);
        } catch (const Error &e) {
            result.errors.push_back(fmt::format("n={}: {}", n, e.what()));
            continue;
        }

        std::vector<ScoredProblem> scored;
        for (const SuiteProblem *problem : members) {
            try {
                scored.push_back({problem, problem->ground
                                               ? *problem->ground
                                               : brute_force_solve(problem->model,
                                                                   config.brute_force_cap)});
            } catch (const Error &e) {
                result.errors.push_back(
                    fmt::format("problem '{}' excluded: {}", problem->id, e.what()));
            }
        }
        if (members.size() < config.problems)
            result.errors.push_back(fmt::format("n={}: only {} of {} requested problems available",
                                                n, members.size(), config.problems));
        if (scored.empty())
            continue;

        io::json fingerprint_json = io::sweep_config_to_json(config);
        fingerprint_json["n"] = n;
        io::json ids = io::json::array();
        for (const auto &s : scored)
            ids.push_back(s.problem->id);
        fingerprint_json["problems"] = ids;

        for (double k : config.k_values) {
            fingerprint_json["k"] = k;
            const std::string fingerprint = fingerprint_json.dump();
            std::optional<CellOutcome> outcome;
            if (config.checkpoint_dir) {
                const auto path = checkpoint_path(*config.checkpoint_dir, n, k);
                if (std::filesystem::exists(path)) {
                    outcome = cell_from_json(io::read_json(path), fingerprint, n, k);
                    if (outcome)
                        ++result.resumed_cells;
                }
            }
            if (!outcome) {
                outcome = run_cell(scored, *embedding, n, k, config);
                if (config.checkpoint_dir) {
                    std::filesystem::create_directories(*config.checkpoint_dir);
                    io::write_json(checkpoint_path(*config.checkpoint_dir, n, k),
                                   cell_to_json(*outcome, fingerprint));
                }
            }
            result.cells.insert(result.cells.end(), outcome->cells.begin(), outcome->cells.end());
            result.profiles.push_back(std::move(outcome->profile));
        }
    }
    return result;
}

void write_sweep_outputs(const SweepResult &result, const SweepConfig &config,
                         const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    std::string csv = "n,k,strategy,p_s,p_b,r_b,n_problems,n_samples\n";
    for (const auto &c : result.cells)
        csv += fmt::format("{},{},{},{},{},{},{},{}\n", c.n, c.k, to_string(c.strategy), c.p_s,
                           c.p_b, c.r_b, c.n_problems, c.n_samples);
    io::write_text(dir / "sweep.csv", csv);

    io::json heatmaps = io::json::array();
    for (const auto &p : result.profiles) {
        if (!p.profile)
            continue;
        const std::string name = heatmap_filename(p.n, p.k);
        io::write_text(dir / name, io::profile_csv(*p.profile));
        heatmaps.push_back(name);
    }

    io::json manifest;
    manifest["format_version"] = io::kFormatVersion;
    manifest["config"] = io::sweep_config_to_json(config);
    manifest["sizes"] = result.sizes;
    manifest["heatmaps"] = heatmaps;
    manifest["errors"] = result.errors;
    manifest["complete"] = result.complete();
    io::write_json(dir / "manifest.json", manifest);
}

}  // namespace chainbreak
