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

#include "chainbreak/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/core.h>

#include "chainbreak/error.hpp"

namespace chainbreak {

VarPair canonical_pair(std::size_t i, std::size_t j) {
    if (i == j)
        throw ValueError(fmt::format("self-pair ({}, {}) is not allowed", i, j));
    return i < j ? VarPair{i, j} : VarPair{j, i};
}

void add_pair(PairWeights &weights, std::size_t i, std::size_t j, double value) {
    weights[canonical_pair(i, j)] += value;
}

QuadraticModel::QuadraticModel(std::vector<double> linear, PairWeights pairs, double offset)
    : linear_(std::move(linear)), offset_(offset) {
    const std::size_t n = linear_.size();
    for (const auto &[key, value] : pairs) {
        if (key.first >= n || key.second >= n)
            throw DimensionError(fmt::format("pair ({}, {}) out of range for {} variables",
                                             key.first, key.second, n));
        add_pair(pairs_, key.first, key.second, value);
    }
}

double QuadraticModel::pair(std::size_t i, std::size_t j) const {
    auto it = pairs_.find(canonical_pair(i, j));
    return it == pairs_.end() ? 0.0 : it->second;
}

double energy_ising(const IsingModel &model, std::span<const Spin> s) {
    if (s.size() != model.size())
        throw DimensionError(fmt::format("spin vector has length {}, model has {} spins",
                                         s.size(), model.size()));
    double e = model.beta();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 1 && s[i] != -1)
            throw ValueError(fmt::format("spin {} has value {}, expected +-1", i, int(s[i])));
        e += model.h()[i] * s[i];
    }
    for (const auto &[key, value] : model.J())
        e += value * s[key.first] * s[key.second];
    return e;
}

double energy_qubo(const Qubo &model, std::span<const std::uint8_t> x) {
    if (x.size() != model.size())
        throw DimensionError(fmt::format("binary vector has length {}, model has {} variables",
                                         x.size(), model.size()));
    double e = model.gamma();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 1)
            throw ValueError(fmt::format("variable {} has value {}, expected 0 or 1", i, int(x[i])));
        e += model.q()[i] * x[i];
    }
    for (const auto &[key, value] : model.Q())
        e += value * x[key.first] * x[key.second];
    return e;
}

// x = (s + 1) / 2 gives
//   q x = q/2 s + q/2
//   Q x_i x_j = Q/4 (s_i s_j + s_i + s_j + 1)
IsingModel qubo_to_ising(const Qubo &model) {
    std::vector<double> h(model.size());
    PairWeights J;
    double beta = model.gamma();
    for (std::size_t i = 0; i < model.size(); ++i) {
        h[i] = model.q()[i] / 2.0;
        beta += model.q()[i] / 2.0;
    }
    for (const auto &[key, value] : model.Q()) {
        const double coupling = value / 4.0;
        J[key] = coupling;
        h[key.first] += coupling;
        h[key.second] += coupling;
        beta += coupling;
    }
    return IsingModel(std::move(h), std::move(J), beta);
}

// s = 2x - 1 gives
//   h s = 2h x - h
//   J s_i s_j = 4J x_i x_j - 2J x_i - 2J x_j + J
Qubo ising_to_qubo(const IsingModel &model) {
    std::vector<double> q(model.size());
    PairWeights Q;
    double gamma = model.beta();
    for (std::size_t i = 0; i < model.size(); ++i) {
        q[i] = 2.0 * model.h()[i];
        gamma -= model.h()[i];
    }
    for (const auto &[key, value] : model.J()) {
        Q[key] = 4.0 * value;
        q[key.first] -= 2.0 * value;
        q[key.second] -= 2.0 * value;
        gamma += value;
    }
    return Qubo(std::move(q), std::move(Q), gamma);
}

SpinVector spins_from_index(std::uint64_t index, std::size_t n) {
    SpinVector s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = (index >> i) & 1U ? 1 : -1;
    return s;
}

std::uint64_t index_from_spins(std::span<const Spin> s) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > 0)
            index |= std::uint64_t{1} << i;
    return index;
}

namespace {

struct Neighbor {
    std::size_t index;
    double weight;
};

}  // namespace

GroundStateReport brute_force_solve(const IsingModel &model, std::size_t max_spins) {
    const std::size_t n = model.size();
    if (n > max_spins || n >= 63)
        throw CapacityError(fmt::format(
            "exhaustive solve of {} spins exceeds the cap of {}", n, max_spins));

    std::vector<std::vector<Neighbor>> adjacency(n);
    for (const auto &[key, value] : model.J()) {
        adjacency[key.first].push_back({key.second, value});
        adjacency[key.second].push_back({key.first, value});
    }

    // Gray-code walk starting from all spins down.
    SpinVector s(n, -1);
    std::vector<double> field(n);
    auto refresh = [&] {
        double e = model.beta();
        for (std::size_t i = 0; i < n; ++i) {
            field[i] = model.h()[i];
            for (const auto &nb : adjacency[i])
                field[i] += nb.weight * s[nb.index];
        }
        for (std::size_t i = 0; i < n; ++i)
            e += s[i] * (model.h()[i] + field[i]) / 2.0;
        return e;
    };
    double energy = refresh();

    // Loose screening band; the exact filter below applies kEnergyTolerance.
    constexpr double kScreen = 1e-6;
    double best = energy;
    std::vector<std::uint64_t> candidates{0};
    std::uint64_t state = 0;

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        energy -= 2.0 * s[bit] * field[bit];
        s[bit] = static_cast<Spin>(-s[bit]);
        state ^= std::uint64_t{1} << bit;
        for (const auto &nb : adjacency[bit])
            field[nb.index] += 2.0 * nb.weight * s[bit];
        if ((step & 0xFFFF) == 0)
            energy = refresh();

        if (energy < best - kScreen) {
            best = energy;
            candidates.clear();
            candidates.push_back(state);
        } else if (energy <= best + kScreen) {
            if (energy < best)
                best = energy;
            candidates.push_back(state);
        }
    }

    GroundStateReport report;
    std::vector<std::pair<std::uint64_t, double>> exact;
    exact.reserve(candidates.size());
    double minimum = INFINITY;
    for (auto index : candidates) {
        const double e = energy_ising(model, spins_from_index(index, n));
        exact.emplace_back(index, e);
        minimum = std::min(minimum, e);
    }
    std::sort(exact.begin(), exact.end());
    report.energy = minimum;
    for (const auto &[index, e] : exact)
        if (e <= minimum + kEnergyTolerance)
            report.states.push_back(spins_from_index(index, n));
    return report;
}

}  // namespace chainbreak
