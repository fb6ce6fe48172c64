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

#include "chainbreak/sampler.hpp"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "chainbreak/error.hpp"
#include "chainbreak/parallel.hpp"

namespace chainbreak {

AnnealSchedule AnnealSchedule::resolved(std::size_t num_qubits) const {
    AnnealSchedule out = *this;
    if (out.sweeps == 0)
        out.sweeps = std::max<std::size_t>(1, kSweepsPerQubit * num_qubits);
    return out;
}

void AnnealSchedule::validate() const {
    if (sweeps < 1)
        throw ConfigError("schedule needs at least one sweep");
    if (!(beta_start > 0.0 && beta_start <= beta_end) || !std::isfinite(beta_end))
        throw ConfigError(fmt::format("inverse temperatures must satisfy 0 < {} <= {}", beta_start,
                                      beta_end));
    if (restarts < 1)
        throw ConfigError("schedule needs at least one restart");
}

double AnnealSchedule::beta_at(std::size_t sweep) const {
    if (sweeps <= 1)
        return beta_end;
    const double fraction = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
    return beta_start * std::pow(beta_end / beta_start, fraction);
}

void NoiseConfig::validate() const {
    if (!(readout_flip_p >= 0.0 && readout_flip_p <= 0.5))
        throw ConfigError(fmt::format("readout flip probability {} outside [0, 0.5]",
                                      readout_flip_p));
}

SparseIsing::SparseIsing(const IsingModel &model) : h_(model.h()) {
    const std::size_t n = model.size();
    std::vector<std::size_t> degree(n, 0);
    for (const auto &[key, value] : model.J()) {
        ++degree[key.first];
        ++degree[key.second];
    }
    offsets_.assign(n + 1, 0);
    std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
    neighbors_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto &[key, value] : model.J()) {
        neighbors_[fill[key.first]++] = {static_cast<std::uint32_t>(key.second), value};
        neighbors_[fill[key.second]++] = {static_cast<std::uint32_t>(key.first), value};
    }
}

double SparseIsing::local_field(std::span<const Spin> s, std::size_t i) const {
    double f = h_[i];
    for (const auto &nb : neighbors(i))
        f += nb.weight * s[nb.index];
    return f;
}

MetropolisChain::MetropolisChain(const SparseIsing &model, SpinVector initial)
    : model_(&model), state_(std::move(initial)), field_(model.size()) {
    if (state_.size() != model.size())
        throw DimensionError(fmt::format("state has {} spins, model has {}", state_.size(),
                                         model.size()));
    for (std::size_t i = 0; i < state_.size(); ++i)
        field_[i] = model.local_field(state_, i);
}

void MetropolisChain::flip(std::size_t i) {
    state_[i] = static_cast<Spin>(-state_[i]);
    const double twice = 2.0 * state_[i];
    for (const auto &nb : model_->neighbors(i))
        field_[nb.index] += twice * nb.weight;
}

void MetropolisChain::sweep(double beta, Rng &rng) {
    const std::size_t n = state_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double delta = delta_energy(i);
        // One uniform per proposal keeps the stream position independent of the
        // accept path.
        const double u = uniform01(rng);
        if (delta <= 0.0 || u < std::exp(-beta * delta))
            flip(i);
    }
}

SpinVector sweep_metropolis(const SparseIsing &model, SpinVector state, double beta, Rng &rng) {
    MetropolisChain chain(model, std::move(state));
    chain.sweep(beta, rng);
    return chain.state();
}

namespace {

SpinVector random_state(std::size_t n, Rng &rng) {
    SpinVector s(n);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0)
            bits = rng();
        s[i] = (bits >> (i % 64)) & 1U ? 1 : -1;
    }
    return s;
}

}  // namespace

PhysicalSampleSet sample_ising(const IsingModel &model, std::size_t n_samples,
                               const AnnealSchedule &schedule, const NoiseConfig &noise,
                               std::uint64_t seed, unsigned threads) {
    const AnnealSchedule plan = schedule.resolved(model.size());
    plan.validate();
    noise.validate();

    const SparseIsing sparse(model);
    std::vector<double> betas(plan.sweeps);
    for (std::size_t t = 0; t < plan.sweeps; ++t)
        betas[t] = plan.beta_at(t);

    PhysicalSampleSet out;
    out.seed = seed;
    out.schedule = plan;
    out.noise = noise;
    out.qubits.resize(model.size());
    std::iota(out.qubits.begin(), out.qubits.end(), std::size_t{0});
    out.samples.resize(n_samples);
    out.energies.resize(n_samples);

    parallel_for(n_samples, threads, [&](std::size_t index) {
        Rng rng(mix_seed(seed, index));
        SpinVector best;
        double best_energy = INFINITY;
        for (std::size_t r = 0; r < plan.restarts; ++r) {
            MetropolisChain chain(sparse, random_state(model.size(), rng));
            for (double beta : betas)
                chain.sweep(beta, rng);
            const double e = energy_ising(model, chain.state());
            if (e < best_energy) {
                best_energy = e;
                best = chain.state();
            }
        }
        if (noise.readout_flip_p > 0.0) {
            for (auto &spin : best)
                if (uniform01(rng) < noise.readout_flip_p)
                    spin = static_cast<Spin>(-spin);
            best_energy = energy_ising(model, best);
        }
        out.samples[index] = std::move(best);
        out.energies[index] = best_energy;
    });
    return out;
}

PhysicalSampleSet sample(const EmbeddedModel &model, std::size_t n_samples,
                         const AnnealSchedule &schedule, const NoiseConfig &noise,
                         std::uint64_t seed, unsigned threads) {
    PhysicalSampleSet out =
        sample_ising(model.physical(), n_samples, schedule, noise, seed, threads);
    out.qubits = model.qubits();
    return out;
}

}  // namespace chainbreak
