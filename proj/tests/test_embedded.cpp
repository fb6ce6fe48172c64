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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "chainbreak/error.hpp"
#include "support/oracles.hpp"

using namespace chainbreak;

namespace {

const ChimeraGraph kGraph = build_chimera(16, 16, 4);

}  // namespace

TEST(EmbedModel, BiasSplit) {
    std::vector<double> h(8, 0.0);
    h[3] = 0.6;
    const EmbeddedModel m = embed_model(IsingModel(h, {}, 0.0), clique_embed(8, kGraph), -1.0);
    for (std::size_t slot : m.chain_slots(3))
        EXPECT_NEAR(m.h()[slot], 0.2, 1e-15);
}

TEST(EmbedModel, CouplerSplitOverTwoEdges) {
    // Chains 0 and 1 share block 0, so two intra-cell edges join them.
    const IsingModel logical(std::vector<double>(4, 0.0), {{{0, 1}, 0.4}}, 0.0);
    const EmbeddedModel m = embed_model(logical, clique_embed(4, kGraph), -1.0);
    std::size_t cross = 0;
    for (const auto &c : m.couplers()) {
        if (c.intra)
            continue;
        ++cross;
        EXPECT_NEAR(c.value, 0.2, 1e-15);
    }
    EXPECT_EQ(cross, 2U);
}

TEST(EmbedModel, ZeroChainStrength) {
    std::mt19937_64 rng(1);
    const EmbeddedModel m = embed_model(oracle::random_ising(8, rng), clique_embed(8, kGraph), 0.0);
    EXPECT_EQ(m.intra_edge_count(), 8U * 2U);
    for (const auto &c : m.couplers())
        if (c.intra)
            EXPECT_EQ(c.value, 0.0);
}

TEST(EmbedModel, IntraEdgesFormChainPaths) {
    std::mt19937_64 rng(2);
    const Embedding e = clique_embed(12, kGraph);
    const EmbeddedModel m = embed_model(oracle::random_ising(12, rng), e, -1.5);
    EXPECT_EQ(m.intra_edge_count(), 12U * 3U);
    for (std::size_t i = 0; i < 12; ++i) {
        const auto &slots = m.chain_slots(i);
        for (std::size_t l = 0; l + 1 < slots.size(); ++l) {
            const auto a = std::min(slots[l], slots[l + 1]);
            const auto b = std::max(slots[l], slots[l + 1]);
            bool found = false;
            for (const auto &c : m.couplers())
                found |= c.intra && c.a == a && c.b == b && c.value == -1.5;
            EXPECT_TRUE(found) << "chain " << i << " position " << l;
        }
    }
}

TEST(EmbedModel, Conservation) {
    std::mt19937_64 rng(3);
    for (std::size_t n : {8U, 16U}) {
        const Embedding e = clique_embed(n, kGraph);
        const IsingModel logical = oracle::random_ising(n, rng);
        const EmbeddedModel m = embed_model(logical, e, -0.7);
        std::vector<std::size_t> owner(m.num_qubits());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t slot : m.chain_slots(i))
                owner[slot] = i;
        std::vector<double> bias(n, 0.0);
        for (std::size_t slot = 0; slot < m.num_qubits(); ++slot)
            bias[owner[slot]] += m.h()[slot];
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(bias[i], logical.h()[i], 1e-12);
        PairWeights sums;
        for (const auto &c : m.couplers()) {
            if (c.intra) {
                EXPECT_EQ(owner[c.a], owner[c.b]);
                continue;
            }
            add_pair(sums, owner[c.a], owner[c.b], c.value);
        }
        ASSERT_EQ(sums.size(), logical.J().size());
        for (const auto &[key, value] : logical.J())
            EXPECT_NEAR(sums.at(key), value, 1e-12);
    }
}

TEST(EmbedModel, EnergyOffsetIdentity) {
    std::mt19937_64 rng(4);
    for (std::size_t n : {8U, 12U, 16U, 20U}) {
        const IsingModel logical = oracle::random_ising(n, rng);
        const double k = -0.5 - 0.25 * static_cast<double>(n / 4);
        const EmbeddedModel m = embed_model(logical, clique_embed(n, kGraph), k);
        for (int trial = 0; trial < 20; ++trial) {
            const SpinVector s = spins_from_index(rng(), n);
            const double gap = m.energy(m.expand(s)) - energy_ising(logical, s);
            EXPECT_NEAR(gap, k * static_cast<double>(m.intra_edge_count()), 1e-9);
        }
    }
}

TEST(EmbedModel, RejectsUncoveredEdge) {
    const ChimeraGraph g = build_chimera(4, 4, 4);
    const Embedding e(g, {{g.qubit({0, 0, 0, 0})}, {g.qubit({2, 2, 1, 0})}});
    const IsingModel logical({0.0, 0.0}, {{{0, 1}, 1.0}}, 0.0);
    EXPECT_THROW(embed_model(logical, e, -1.0), EmbeddingError);
}

TEST(EmbedModel, QubitOrderAndLookup) {
    std::mt19937_64 rng(5);
    const EmbeddedModel m = embed_model(oracle::random_ising(8, rng), clique_embed(8, kGraph), -1.0);
    EXPECT_EQ(m.num_qubits(), 24U);
    EXPECT_TRUE(std::is_sorted(m.qubits().begin(), m.qubits().end()));
    for (std::size_t i = 0; i < m.num_qubits(); ++i)
        EXPECT_EQ(m.local_index(m.qubits()[i]), i);
    EXPECT_THROW(m.local_index(2047), DataError);
}
