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

#include "chainbreak/decode.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "chainbreak/error.hpp"

namespace chainbreak {

ChainLayout::ChainLayout(std::vector<std::vector<std::size_t>> slots, std::size_t num_qubits)
    : slots_(std::move(slots)), num_qubits_(num_qubits) {
    for (const auto &chain : slots_) {
        if (chain.empty())
            throw DataError("chain layout contains an empty chain");
        for (std::size_t slot : chain)
            if (slot >= num_qubits_)
                throw DataError(fmt::format("chain slot {} outside {} sampled qubits", slot,
                                            num_qubits_));
    }
}

ChainLayout::ChainLayout(const Embedding &embedding, std::span<const std::size_t> qubits)
    : num_qubits_(qubits.size()) {
    slots_.resize(embedding.size());
    for (std::size_t i = 0; i < embedding.size(); ++i) {
        if (embedding.chain(i).empty())
            throw DataError(fmt::format("chain {} is empty", i));
        for (std::size_t q : embedding.chain(i)) {
            auto it = std::find(qubits.begin(), qubits.end(), q);
            if (it == qubits.end())
                throw DataError(fmt::format("sample has no value for qubit {} of chain {}", q, i));
            slots_[i].push_back(static_cast<std::size_t>(it - qubits.begin()));
        }
    }
}

ChainLayout::ChainLayout(const EmbeddedModel &model)
    : ChainLayout(model.chain_slots(), model.num_qubits()) {}

FaultProfile::FaultProfile(std::vector<std::vector<double>> p_hat, std::size_t broken_samples)
    : p_hat_(std::move(p_hat)), broken_samples_(broken_samples) {
    for (std::size_t i = 0; i < p_hat_.size(); ++i)
        for (std::size_t l = 0; l < p_hat_[i].size(); ++l)
            if (!(p_hat_[i][l] >= 0.0 && p_hat_[i][l] <= 1.0))
                throw ValueError(fmt::format("fault probability [{}][{}] = {} outside [0, 1]", i,
                                             l, p_hat_[i][l]));
}

bool FaultProfile::covers(const ChainLayout &layout) const {
    if (p_hat_.size() != layout.size())
        return false;
    for (std::size_t i = 0; i < p_hat_.size(); ++i)
        if (p_hat_[i].size() != layout.chain(i).size())
            return false;
    return true;
}

std::vector<ChainReadout> detect_breaks(std::span<const Spin> sample, const ChainLayout &layout) {
    if (sample.size() != layout.num_qubits())
        throw DataError(fmt::format("sample has {} values, layout expects {}", sample.size(),
                                    layout.num_qubits()));
    std::vector<ChainReadout> out(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        ChainReadout &r = out[i];
        r.chain = i;
        r.values.reserve(layout.chain(i).size());
        for (std::size_t slot : layout.chain(i))
            r.values.push_back(sample[slot]);
        const auto [lo, hi] = std::minmax_element(r.values.begin(), r.values.end());
        r.broken = *lo != *hi;
    }
    return out;
}

std::optional<SpinVector> decode_discard(std::span<const ChainReadout> readouts) {
    SpinVector out;
    out.reserve(readouts.size());
    for (const auto &r : readouts) {
        if (r.broken)
            return std::nullopt;
        out.push_back(r.values.front());
    }
    return out;
}

namespace {

Spin tie_break(const ChainReadout &readout, const FaultProfile *profile) {
    if (profile != nullptr && readout.chain < profile->size()
        && profile->chain(readout.chain).size() == readout.values.size()) {
        const auto &p = profile->chain(readout.chain);
        const double lowest = *std::min_element(p.begin(), p.end());
        Spin choice = 0;
        bool unique = true;
        for (std::size_t l = 0; l < p.size(); ++l) {
            if (p[l] != lowest)
                continue;
            if (choice == 0)
                choice = readout.values[l];
            else if (choice != readout.values[l])
                unique = false;
        }
        if (unique)
            return choice;
    }
    return readout.values.front();
}

}  // namespace

Spin majority_value(const ChainReadout &readout, const FaultProfile *profile) {
    long tally = 0;
    for (Spin v : readout.values)
        tally += v;
    if (tally > 0)
        return 1;
    if (tally < 0)
        return -1;
    return tie_break(readout, profile);
}

SpinVector decode_majority(std::span<const ChainReadout> readouts, const FaultProfile *profile) {
    SpinVector out;
    out.reserve(readouts.size());
    for (const auto &r : readouts)
        out.push_back(majority_value(r, profile));
    return out;
}

WeightedScores weighted_scores(std::span<const Spin> values, std::span<const double> p_hat) {
    if (values.size() != p_hat.size())
        throw DimensionError(fmt::format("{} chain values but {} fault probabilities",
                                         values.size(), p_hat.size()));
    double plus_agree = 1.0;
    double minus_agree = 1.0;
    for (std::size_t l = 0; l < values.size(); ++l) {
        if (!(p_hat[l] >= 0.0 && p_hat[l] <= 1.0))
            throw ValueError(fmt::format("fault probability {} outside [0, 1]", p_hat[l]));
        if (values[l] > 0)
            plus_agree *= p_hat[l];
        else
            minus_agree *= p_hat[l];
    }
    // Spins agreeing with one candidate are exactly those opposing the other.
    return {(1.0 - plus_agree) * minus_agree, (1.0 - minus_agree) * plus_agree};
}

Spin weighted_value(const ChainReadout &readout, const FaultProfile &profile) {
    if (readout.chain >= profile.size()
        || profile.chain(readout.chain).size() != readout.values.size())
        throw DataError(fmt::format("fault profile does not cover chain {}", readout.chain));
    std::vector<double> p = profile.chain(readout.chain);
    for (double &x : p)
        x = std::clamp(x, kFaultClamp, 1.0 - kFaultClamp);
    const WeightedScores w = weighted_scores(readout.values, p);
    if (w.plus > w.minus)
        return 1;
    if (w.minus > w.plus)
        return -1;
    return tie_break(readout, &profile);
}

SpinVector decode_weighted(std::span<const ChainReadout> readouts, const FaultProfile &profile) {
    SpinVector out;
    out.reserve(readouts.size());
    for (const auto &r : readouts)
        out.push_back(weighted_value(r, profile));
    return out;
}

const SpinVector &nearest_ground_state(std::span<const Spin> logical,
                                       const GroundStateReport &ground) {
    if (ground.states.empty())
        throw DataError("ground-state report lists no states");
    const SpinVector *best = nullptr;
    std::size_t best_distance = 0;
    for (const auto &state : ground.states) {
        if (state.size() != logical.size())
            throw DimensionError(fmt::format("ground state has {} spins, sample decodes to {}",
                                             state.size(), logical.size()));
        std::size_t distance = 0;
        for (std::size_t i = 0; i < state.size(); ++i)
            distance += state[i] != logical[i];
        if (best == nullptr || distance < best_distance) {
            best = &state;
            best_distance = distance;
        }
    }
    return *best;
}

FaultTally::FaultTally(const ChainLayout &layout) : layout_(&layout) {
    faults_.resize(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i)
        faults_[i].assign(layout.chain(i).size(), 0);
}

void FaultTally::add_sample(std::span<const Spin> sample, std::span<const Spin> reference) {
    const auto readouts = detect_breaks(sample, *layout_);
    if (reference.size() != readouts.size())
        throw DimensionError(fmt::format("reference has {} spins for {} chains", reference.size(),
                                         readouts.size()));
    if (std::none_of(readouts.begin(), readouts.end(), [](const auto &r) { return r.broken; }))
        return;
    ++broken_;
    for (const auto &r : readouts)
        for (std::size_t l = 0; l < r.values.size(); ++l)
            faults_[r.chain][l] += r.values[l] != reference[r.chain];
}

void FaultTally::add(std::span<const SpinVector> samples, const GroundStateReport &ground) {
    for (const auto &sample : samples) {
        const auto readouts = detect_breaks(sample, *layout_);
        if (std::none_of(readouts.begin(), readouts.end(), [](const auto &r) { return r.broken; }))
            continue;
        add_sample(sample, nearest_ground_state(decode_majority(readouts), ground));
    }
}

std::optional<FaultProfile> FaultTally::profile() const {
    if (broken_ == 0)
        return std::nullopt;
    std::vector<std::vector<double>> p(faults_.size());
    for (std::size_t i = 0; i < faults_.size(); ++i) {
        p[i].reserve(faults_[i].size());
        for (std::size_t count : faults_[i])
            p[i].push_back(static_cast<double>(count) / static_cast<double>(broken_));
    }
    return FaultProfile(std::move(p), broken_);
}

std::optional<FaultProfile> estimate_fault_profile(std::span<const SpinVector> samples,
                                                   const ChainLayout &layout,
                                                   const GroundStateReport &ground) {
    FaultTally tally(layout);
    tally.add(samples, ground);
    return tally.profile();
}

std::string to_string(Strategy strategy) {
    switch (strategy) {
    case Strategy::Discard: return "discard";
    case Strategy::Majority: return "majority";
    case Strategy::Weighted: return "weighted";
    }
    return "unknown";
}

Strategy parse_strategy(const std::string &name) {
    if (name == "discard")
        return Strategy::Discard;
    if (name == "majority")
        return Strategy::Majority;
    if (name == "weighted")
        return Strategy::Weighted;
    throw ConfigError(fmt::format("unknown strategy '{}'", name));
}

DecodedSampleSet decode_samples(std::span<const SpinVector> samples, const ChainLayout &layout,
                                Strategy strategy, const FaultProfile *profile) {
    DecodedSampleSet out;
    out.strategy = strategy;
    out.chain_count = layout.size();
    out.samples.reserve(samples.size());
    for (const auto &sample : samples) {
        const auto readouts = detect_breaks(sample, layout);
        DecodedSample decoded;
        decoded.broken_chains = static_cast<std::size_t>(
            std::count_if(readouts.begin(), readouts.end(), [](const auto &r) { return r.broken; }));
        switch (strategy) {
        case Strategy::Discard:
            decoded.state = decode_discard(readouts);
            break;
        case Strategy::Majority:
            decoded.state = decode_majority(readouts, profile);
            break;
        case Strategy::Weighted:
            if (decoded.broken_chains == 0)
                decoded.state = decode_discard(readouts);
            else if (profile == nullptr)
                throw DataError("weighted decoding of broken samples needs a fault profile");
            else
                decoded.state = decode_weighted(readouts, *profile);
            break;
        }
        out.samples.push_back(std::move(decoded));
    }
    return out;
}

}  // namespace chainbreak
