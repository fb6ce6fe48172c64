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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainbreak/decode.hpp"
#include "chainbreak/ising.hpp"
#include "chainbreak/sampler.hpp"

namespace chainbreak {

// Per-sample outcome flags for one problem under one decoding strategy.
struct ProblemResult {
    std::string id;
    std::vector<std::uint8_t> success;        // decoded energy equals the ground energy
    std::vector<std::uint8_t> broken;         // at least one chain broken
    std::vector<std::size_t> broken_chains;   // number of broken chains
    std::size_t chain_count = 0;

    std::size_t num_samples() const { return success.size(); }
};

// Discarded samples count as failures.
ProblemResult score(const DecodedSampleSet &decoded, const IsingModel &logical,
                    const GroundStateReport &ground, std::string id = {});

double prob_success(const ProblemResult &result);
double prob_broken(const ProblemResult &result);
double ratio_broken(const ProblemResult &result);

struct SuiteAverages {
    double p_s = 0.0;
    double p_b = 0.0;
    double r_b = 0.0;
    std::size_t problems = 0;
};

// Unweighted means over problems.
SuiteAverages aggregate(std::span<const ProblemResult> results);

// One-sided two-proportion z-test: true when rate a exceeds rate b at the
// given normal quantile (2.326 for 99%).
constexpr double kZ99 = 2.3263478740408408;
bool greater_with_confidence(double rate_a, std::size_t n_a, double rate_b, std::size_t n_b,
                             double z = kZ99);

struct SuiteProblem {
    std::string id;
    IsingModel model;
    std::optional<GroundStateReport> ground;
};

struct SweepConfig {
    std::vector<double> k_values{0.0, -0.25, -0.5, -1.0, -1.5, -2.0};
    std::vector<Strategy> strategies{Strategy::Discard, Strategy::Majority, Strategy::Weighted};
    std::size_t problems = 50;  // per problem size
    std::size_t samples = 500;  // per problem and k
    AnnealSchedule schedule;
    NoiseConfig noise;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t chimera_rows = 16;
    std::size_t chimera_cols = 16;
    std::size_t chimera_shore = 4;
    std::size_t brute_force_cap = kDefaultBruteForceCap;
    // When set, finished cells are checkpointed here and reused on rerun.
    std::optional<std::filesystem::path> checkpoint_dir;

    void validate() const;
};

struct SweepCell {
    std::size_t n = 0;
    double k = 0.0;
    Strategy strategy = Strategy::Discard;
    double p_s = 0.0;
    double p_b = 0.0;
    double r_b = 0.0;
    std::size_t n_problems = 0;
    std::size_t n_samples = 0;  // per problem
};

struct CellProfile {
    std::size_t n = 0;
    double k = 0.0;
    std::optional<FaultProfile> profile;  // pooled over the cell's problems
};

struct SweepResult {
    std::vector<std::size_t> sizes;
    std::vector<SweepCell> cells;
    std::vector<CellProfile> profiles;
    std::vector<std::string> errors;
    std::size_t resumed_cells = 0;

    bool complete() const { return errors.empty(); }
    const SweepCell *find(std::size_t n, double k, Strategy strategy) const;
    const CellProfile *profile(std::size_t n, double k) const;
};

// For every problem size, chain strength and problem: embed with the clique
// layout, sample, and decode with every strategy. The fault profile of a
// (size, k) cell is pooled over its problems and drives weighted decoding in
// that cell. Problem p of size n samples with seed
// mix_seed(mix_seed(seed, n), p) at every k.
SweepResult run_sweep(std::span<const SuiteProblem> suite, const SweepConfig &config);

// sweep.csv, heatmap_n{N}_k{K}.csv per cell with a profile, manifest.json.
void write_sweep_outputs(const SweepResult &result, const SweepConfig &config,
                         const std::filesystem::path &dir);

std::string heatmap_filename(std::size_t n, double k);

}  // namespace chainbreak
