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

#include "chainbreak/embedded.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "chainbreak/error.hpp"

namespace chainbreak {

namespace {

IsingModel physical_model(std::size_t size, const std::vector<double> &h,
                          const std::vector<PhysicalCoupler> &couplers, double offset) {
    PairWeights J;
    for (const auto &c : couplers)
        add_pair(J, c.a, c.b, c.value);
    std::vector<double> linear = h;
    linear.resize(size, 0.0);
    return IsingModel(std::move(linear), std::move(J), offset);
}

}  // namespace

EmbeddedModel::EmbeddedModel(IsingModel logical, Embedding embedding, double chain_strength,
                             std::vector<std::size_t> qubits, std::vector<double> h,
                             std::vector<PhysicalCoupler> couplers)
    : logical_(std::move(logical)),
      embedding_(std::move(embedding)),
      chain_strength_(chain_strength),
      qubits_(std::move(qubits)),
      h_(std::move(h)),
      couplers_(std::move(couplers)) {
    if (!std::is_sorted(qubits_.begin(), qubits_.end())
        || std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end())
        throw DataError("active qubits must be strictly ascending");
    if (h_.size() != qubits_.size())
        throw DimensionError(fmt::format("{} biases for {} qubits", h_.size(), qubits_.size()));
    for (const auto &c : couplers_)
        if (c.a >= qubits_.size() || c.b >= qubits_.size() || c.a == c.b)
            throw DimensionError(fmt::format("coupler ({}, {}) is not between active qubits", c.a, c.b));
    slots_.resize(embedding_.size());
    for (std::size_t i = 0; i < embedding_.size(); ++i)
        for (std::size_t q : embedding_.chain(i))
            slots_[i].push_back(local_index(q));
    physical_ = physical_model(qubits_.size(), h_, couplers_, logical_.beta());
}

std::size_t EmbeddedModel::intra_edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(couplers_.begin(), couplers_.end(), [](const auto &c) { return c.intra; }));
}

std::size_t EmbeddedModel::local_index(std::size_t qubit) const {
    auto it = std::lower_bound(qubits_.begin(), qubits_.end(), qubit);
    if (it == qubits_.end() || *it != qubit)
        throw DataError(fmt::format("qubit {} is not part of the embedded model", qubit));
    return static_cast<std::size_t>(it - qubits_.begin());
}

SpinVector EmbeddedModel::expand(std::span<const Spin> logical_spins) const {
    if (logical_spins.size() != slots_.size())
        throw DimensionError(fmt::format("{} logical spins for {} chains", logical_spins.size(),
                                         slots_.size()));
    SpinVector out(qubits_.size(), 1);
    for (std::size_t i = 0; i < slots_.size(); ++i)
        for (std::size_t slot : slots_[i])
            out[slot] = logical_spins[i];
    return out;
}

EmbeddedModel embed_model(const IsingModel &logical, const Embedding &embedding,
                          double chain_strength) {
    const auto violations = validate_embedding(embedding, logical);
    if (!violations.empty())
        throw EmbeddingError(fmt::format("invalid embedding: {} ({} violation(s))",
                                         violations.front().message, violations.size()));

    const ChimeraGraph &graph = embedding.graph();
    std::vector<std::size_t> qubits;
    for (const Chain &chain : embedding.chains())
        qubits.insert(qubits.end(), chain.begin(), chain.end());
    std::sort(qubits.begin(), qubits.end());

    auto local = [&](std::size_t q) {
        return static_cast<std::size_t>(std::lower_bound(qubits.begin(), qubits.end(), q)
                                        - qubits.begin());
    };

    std::vector<double> h(qubits.size(), 0.0);
    for (std::size_t i = 0; i < embedding.size(); ++i) {
        const Chain &chain = embedding.chain(i);
        for (std::size_t q : chain)
            h[local(q)] = logical.h()[i] / static_cast<double>(chain.size());
    }

    std::vector<PhysicalCoupler> couplers;
    for (const auto &[key, value] : logical.J()) {
        std::vector<std::pair<std::size_t, std::size_t>> cross;
        for (std::size_t a : embedding.chain(key.first))
            for (std::size_t b : embedding.chain(key.second))
                if (graph.has_edge(a, b))
                    cross.emplace_back(local(a), local(b));
        const double share = value / static_cast<double>(cross.size());
        for (auto [a, b] : cross)
            couplers.push_back({std::min(a, b), std::max(a, b), share, false});
    }

    for (const Chain &chain : embedding.chains()) {
        std::vector<bool> reached(chain.size(), false);
        std::vector<std::size_t> queue{0};
        reached[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t at = queue[head];
            for (std::size_t next = 0; next < chain.size(); ++next) {
                if (reached[next] || !graph.has_edge(chain[at], chain[next]))
                    continue;
                reached[next] = true;
                queue.push_back(next);
                const std::size_t a = local(chain[at]);
                const std::size_t b = local(chain[next]);
                couplers.push_back({std::min(a, b), std::max(a, b), chain_strength, true});
            }
        }
    }

    std::sort(couplers.begin(), couplers.end(), [](const auto &x, const auto &y) {
        return std::pair{x.a, x.b} < std::pair{y.a, y.b};
    });
    return EmbeddedModel(logical, embedding, chain_strength, std::move(qubits), std::move(h),
                         std::move(couplers));
}

}  // namespace chainbreak
