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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainbreak/embedded.hpp"
#include "chainbreak/ising.hpp"

namespace chainbreak {

// Local qubit indices of each chain, in chain order. Built from an embedding
// and the column order of a sample set.
class ChainLayout {
  public:
    ChainLayout() = default;
    explicit ChainLayout(std::vector<std::vector<std::size_t>> slots, std::size_t num_qubits);
    // Throws DataError if a chain qubit is missing from `qubits`.
    ChainLayout(const Embedding &embedding, std::span<const std::size_t> qubits);
    explicit ChainLayout(const EmbeddedModel &model);

    std::size_t size() const { return slots_.size(); }
    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<std::size_t> &chain(std::size_t i) const { return slots_[i]; }
    const std::vector<std::vector<std::size_t>> &chains() const { return slots_; }

  private:
    std::vector<std::vector<std::size_t>> slots_;
    std::size_t num_qubits_ = 0;
};

struct ChainReadout {
    std::size_t chain = 0;
    SpinVector values;  // physical spins in chain order
    bool broken = false;
};

// Per chain, per position: empirical probability that the physical spin
// disagrees with the ground-state value, over samples with a broken chain.
class FaultProfile {
  public:
    FaultProfile() = default;
    // Throws ValueError for entries outside [0, 1].
    FaultProfile(std::vector<std::vector<double>> p_hat, std::size_t broken_samples);

    std::size_t size() const { return p_hat_.size(); }
    const std::vector<double> &chain(std::size_t i) const { return p_hat_.at(i); }
    const std::vector<std::vector<double>> &values() const { return p_hat_; }
    std::size_t broken_samples() const { return broken_samples_; }

    bool covers(const ChainLayout &layout) const;

  private:
    std::vector<std::vector<double>> p_hat_;
    std::size_t broken_samples_ = 0;
};

std::vector<ChainReadout> detect_breaks(std::span<const Spin> sample, const ChainLayout &layout);

// Logical state when no chain is broken, otherwise nullopt.
std::optional<SpinVector> decode_discard(std::span<const ChainReadout> readouts);

// Even-length ties go to the value held by the lowest-fault position when a
// profile is given and that position is unique, otherwise to position 0.
Spin majority_value(const ChainReadout &readout, const FaultProfile *profile = nullptr);
SpinVector decode_majority(std::span<const ChainReadout> readouts,
                           const FaultProfile *profile = nullptr);

struct WeightedScores {
    double plus = 0.0;
    double minus = 0.0;
};

// W(x) = (1 - prod_{l: q_l = x} p_l) * prod_{l: q_l != x} p_l with empty
// products equal to 1. No clamping; throws ValueError for p outside [0, 1].
WeightedScores weighted_scores(std::span<const Spin> values, std::span<const double> p_hat);

// Fault probabilities are clamped to [1e-6, 1 - 1e-6] before scoring.
constexpr double kFaultClamp = 1e-6;
Spin weighted_value(const ChainReadout &readout, const FaultProfile &profile);
SpinVector decode_weighted(std::span<const ChainReadout> readouts, const FaultProfile &profile);

// Accumulates disagreement counts over broken samples. Samples from several
// problems sharing one embedding can be pooled into a single profile.
class FaultTally {
  public:
    explicit FaultTally(const ChainLayout &layout);

    // Adds every sample of `samples` that has at least one broken chain,
    // judged against the ground state closest (in logical Hamming distance)
    // to the sample's majority decoding; ties go to the earliest state.
    void add(std::span<const SpinVector> samples, const GroundStateReport &ground);
    void add_sample(std::span<const Spin> sample, std::span<const Spin> reference);

    std::size_t broken_samples() const { return broken_; }
    const std::vector<std::vector<std::size_t>> &faults() const { return faults_; }

    // nullopt when no broken sample has been seen.
    std::optional<FaultProfile> profile() const;

  private:
    const ChainLayout *layout_;
    std::vector<std::vector<std::size_t>> faults_;
    std::size_t broken_ = 0;
};

std::optional<FaultProfile> estimate_fault_profile(std::span<const SpinVector> samples,
                                                   const ChainLayout &layout,
                                                   const GroundStateReport &ground);

// Ground state nearest to `logical` in Hamming distance, earliest on ties.
const SpinVector &nearest_ground_state(std::span<const Spin> logical,
                                       const GroundStateReport &ground);

enum class Strategy { Discard, Majority, Weighted };

std::string to_string(Strategy strategy);
Strategy parse_strategy(const std::string &name);

struct DecodedSample {
    std::optional<SpinVector> state;  // empty when discarded
    std::size_t broken_chains = 0;
    bool discarded() const { return !state.has_value(); }
};

struct DecodedSampleSet {
    Strategy strategy = Strategy::Discard;
    std::size_t chain_count = 0;
    std::vector<DecodedSample> samples;
};

// Weighted decoding requires `profile` unless no sample has a broken chain.
// Majority decoding uses it, when given, for tie-breaking.
DecodedSampleSet decode_samples(std::span<const SpinVector> samples, const ChainLayout &layout,
                                Strategy strategy, const FaultProfile *profile = nullptr);

}  // namespace chainbreak
