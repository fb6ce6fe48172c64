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
#include <span>
#include <vector>

#include "chainbreak/embedded.hpp"
#include "chainbreak/ising.hpp"
#include "chainbreak/rng.hpp"

namespace chainbreak {

// Simulated annealing schedule. Inverse temperature moves geometrically from
// beta_start on the first sweep to beta_end on the last.
struct AnnealSchedule {
    std::size_t sweeps = 0;  // 0 selects 100 sweeps per qubit
    double beta_start = 0.1;
    double beta_end = 10.0;
    std::size_t restarts = 1;  // independent runs per sample, lowest energy kept

    static constexpr std::size_t kSweepsPerQubit = 100;

    AnnealSchedule resolved(std::size_t num_qubits) const;
    void validate() const;
    double beta_at(std::size_t sweep) const;
};

struct NoiseConfig {
    // Independent flip probability applied to every qubit after annealing.
    double readout_flip_p = 0.0;

    void validate() const;
};

struct Neighbor {
    std::uint32_t index;
    double weight;
};

// Compressed adjacency form of an Ising model for local-field updates.
class SparseIsing {
  public:
    explicit SparseIsing(const IsingModel &model);

    std::size_t size() const { return h_.size(); }
    double h(std::size_t i) const { return h_[i]; }
    std::span<const Neighbor> neighbors(std::size_t i) const {
        return {neighbors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    // h_i + sum_j J_ij s_j.
    double local_field(std::span<const Spin> s, std::size_t i) const;

  private:
    std::vector<double> h_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> neighbors_;
};

// Spin state with cached local fields; flipping spin i changes the energy by
// -2 s_i f_i and touches only the fields of its neighbors.
class MetropolisChain {
  public:
    MetropolisChain(const SparseIsing &model, SpinVector initial);

    // One pass over all spins in index order, each flip accepted with
    // probability min(1, exp(-beta dE)).
    void sweep(double beta, Rng &rng);

    double delta_energy(std::size_t i) const { return -2.0 * state_[i] * field_[i]; }
    void flip(std::size_t i);
    const SpinVector &state() const { return state_; }
    double field(std::size_t i) const { return field_[i]; }

  private:
    const SparseIsing *model_;
    SpinVector state_;
    std::vector<double> field_;
};

SpinVector sweep_metropolis(const SparseIsing &model, SpinVector state, double beta, Rng &rng);

struct PhysicalSampleSet {
    std::vector<std::size_t> qubits;   // hardware id of each column
    std::vector<SpinVector> samples;   // one row per sample, local qubit order
    std::vector<double> energies;      // physical energy of each row as read out
    std::uint64_t seed = 0;
    AnnealSchedule schedule;
    NoiseConfig noise;

    std::size_t size() const { return samples.size(); }
};

// Sample i anneals from a uniformly random state using the stream
// Rng(mix_seed(seed, i)), then applies readout noise. The result is the same
// for any thread count.
PhysicalSampleSet sample_ising(const IsingModel &model, std::size_t n_samples,
                               const AnnealSchedule &schedule, const NoiseConfig &noise,
                               std::uint64_t seed, unsigned threads = 1);

PhysicalSampleSet sample(const EmbeddedModel &model, std::size_t n_samples,
                         const AnnealSchedule &schedule, const NoiseConfig &noise,
                         std::uint64_t seed, unsigned threads = 1);

}  // namespace chainbreak
