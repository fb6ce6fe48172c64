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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainbreak/bench.hpp"
#include "chainbreak/chimera.hpp"
#include "chainbreak/decode.hpp"
#include "chainbreak/embedded.hpp"
#include "chainbreak/ising.hpp"
#include "chainbreak/portfolio.hpp"
#include "chainbreak/sampler.hpp"

namespace chainbreak::io {

using nlohmann::json;

constexpr int kFormatVersion = 1;

// Problem file: {"n", "h", "j": [[i, j, value], ...], "beta",
//                optional "ground": {"energy", "states": [[+-1, ...], ...]}}
struct ProblemFile {
    IsingModel model;
    std::optional<GroundStateReport> ground;
};

json problem_to_json(const IsingModel &model, const GroundStateReport *ground = nullptr);
ProblemFile problem_from_json(const json &j);

// {"n", "graph": {"m", "n", "l"}, "chains": [[qubit, ...], ...]}
json embedding_to_json(const Embedding &embedding);
// Accepts an embedding object or any object nesting one under "embedding".
Embedding embedding_from_json(const json &j);

// Embedded model: logical problem, embedding, k, active qubits, physical
// biases, and couplers split into "inter" and "intra" lists of
// [qubit, qubit, value] in hardware ids.
json embedded_to_json(const EmbeddedModel &model);
EmbeddedModel embedded_from_json(const json &j);

json schedule_to_json(const AnnealSchedule &schedule);
AnnealSchedule schedule_from_json(const json &j);
json suite_config_to_json(const SuiteConfig &cfg);
json sweep_config_to_json(const SweepConfig &cfg);

// Samples: CSV with header "sample,q<id>,...,energy", one row per sample.
// The JSON sidecar records seed, schedule, noise and qubit ids.
void write_samples(const std::filesystem::path &csv, const PhysicalSampleSet &samples);
PhysicalSampleSet read_samples(const std::filesystem::path &csv);
std::filesystem::path sidecar_path(const std::filesystem::path &csv);

// Rows (chain, position, p_hat, n_b).
std::string profile_csv(const FaultProfile &profile);
void write_profile(const std::filesystem::path &csv, const FaultProfile &profile);
FaultProfile read_profile(const std::filesystem::path &csv);

// Rows (sample, s0..s{n-1}, discarded, broken_chains); spins are blank when discarded.
void write_decoded(const std::filesystem::path &csv, const DecodedSampleSet &decoded);

json read_json(const std::filesystem::path &path);
void write_json(const std::filesystem::path &path, const json &j);
void write_text(const std::filesystem::path &path, const std::string &text);

// All problem_*.json files of a directory, ordered by file name. The id of
// each problem is its file stem.
std::vector<SuiteProblem> load_suite(const std::filesystem::path &dir);

}  // namespace chainbreak::io
