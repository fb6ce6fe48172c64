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

#include <random>

#include <gtest/gtest.h>

#include "chainbreak/error.hpp"
#include "support/oracles.hpp"

using namespace chainbreak;

TEST(IsingEnergy, HandExamples) {
    EXPECT_DOUBLE_EQ(energy_ising(IsingModel({1.0}, {}, 0.0), SpinVector{1}), 1.0);
    EXPECT_DOUBLE_EQ(energy_ising(IsingModel({0.0, 0.0}, {{{0, 1}, -1.0}}, 0.0), SpinVector{1, 1}),
                     -1.0);
    // -1 - 1 + 1 + 1
    EXPECT_DOUBLE_EQ(energy_ising(IsingModel({1.0, 1.0}, {{{0, 1}, 1.0}}, 1.0), SpinVector{-1, -1}),
                     0.0);
}

TEST(IsingEnergy, RejectsBadInput) {
    const IsingModel m({1.0, 2.0}, {}, 0.0);
    EXPECT_THROW(energy_ising(m, SpinVector{1}), DimensionError);
    EXPECT_THROW(energy_ising(m, SpinVector{1, 0}), ValueError);
}

TEST(QuboEnergy, HandExamples) {
    const Qubo linear({2.0}, {}, 0.0);
    EXPECT_DOUBLE_EQ(energy_qubo(linear, BinaryVector{1}), 2.0);
    EXPECT_DOUBLE_EQ(energy_qubo(linear, BinaryVector{0}), 0.0);
    EXPECT_DOUBLE_EQ(energy_qubo(Qubo({0.0, 0.0}, {{{0, 1}, 4.0}}, 0.0), BinaryVector{1, 1}), 4.0);
    EXPECT_THROW(energy_qubo(linear, BinaryVector{0, 1}), DimensionError);
    EXPECT_THROW(energy_qubo(linear, BinaryVector{2}), ValueError);
}

TEST(Storage, PairsAreCanonical) {
    PairWeights J;
    add_pair(J, 3, 1, 0.5);
    add_pair(J, 1, 3, 0.25);
    const IsingModel m({0, 0, 0, 0}, J, 0.0);
    ASSERT_EQ(m.J().size(), 1U);
    EXPECT_EQ(m.J().begin()->first, (VarPair{1, 3}));
    EXPECT_DOUBLE_EQ(m.pair(3, 1), 0.75);

    // Reversed keys given directly are normalized too.
    const IsingModel reversed({0, 0}, {{{1, 0}, 2.0}}, 0.0);
    EXPECT_DOUBLE_EQ(reversed.pair(0, 1), 2.0);

    EXPECT_THROW(IsingModel({0, 0}, {{{1, 1}, 1.0}}, 0.0), ValueError);
    EXPECT_THROW(IsingModel({0, 0}, {{{0, 2}, 1.0}}, 0.0), DimensionError);
}

TEST(Conversion, QuboToIsingExamples) {
    const IsingModel a = qubo_to_ising(Qubo({2.0}, {}, 0.0));
    EXPECT_EQ(a.h(), std::vector<double>{1.0});
    EXPECT_TRUE(a.J().empty());
    EXPECT_DOUBLE_EQ(a.beta(), 1.0);

    const IsingModel b = qubo_to_ising(Qubo({0.0, 0.0}, {{{0, 1}, 4.0}}, 0.0));
    EXPECT_EQ(b.h(), (std::vector<double>{1.0, 1.0}));
    EXPECT_DOUBLE_EQ(b.pair(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(b.beta(), 1.0);

    const IsingModel zero = qubo_to_ising(Qubo({0.0}, {}, 0.0));
    EXPECT_EQ(zero.h(), std::vector<double>{0.0});
    EXPECT_DOUBLE_EQ(zero.beta(), 0.0);
}

TEST(Conversion, IsingToQuboExamples) {
    const Qubo a = ising_to_qubo(IsingModel({1.0}, {}, 1.0));
    EXPECT_EQ(a.q(), std::vector<double>{2.0});
    EXPECT_TRUE(a.Q().empty());
    EXPECT_DOUBLE_EQ(a.gamma(), 0.0);
    const Qubo zero = ising_to_qubo(IsingModel({0.0}, {}, 0.0));
    EXPECT_EQ(zero.q(), std::vector<double>{0.0});
    EXPECT_DOUBLE_EQ(zero.gamma(), 0.0);
}

TEST(Conversion, ExhaustiveEnergyEquivalence) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 10; ++n) {
        const Qubo qubo = oracle::random_qubo(n, rng);
        const IsingModel ising = qubo_to_ising(qubo);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            BinaryVector x(n);
            SpinVector s(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = (bits >> i) & 1U;
                s[i] = static_cast<Spin>(2 * x[i] - 1);
            }
            ASSERT_NEAR(energy_qubo(qubo, x), energy_ising(ising, s), 1e-9);
        }
    }
}

TEST(Conversion, RoundTripIsCoefficientExact) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const IsingModel m = oracle::random_ising(6, rng);
        const IsingModel back = qubo_to_ising(ising_to_qubo(m));
        ASSERT_EQ(back.size(), m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            EXPECT_NEAR(back.h()[i], m.h()[i], 1e-12);
        ASSERT_EQ(back.J().size(), m.J().size());
        for (const auto &[key, value] : m.J())
            EXPECT_NEAR(back.pair(key.first, key.second), value, 1e-12);
        EXPECT_NEAR(back.beta(), m.beta(), 1e-12);
    }
}

TEST(BruteForce, HandExamples) {
    const auto single = brute_force_solve(IsingModel({1.0}, {}, 0.0));
    EXPECT_DOUBLE_EQ(single.energy, -1.0);
    ASSERT_EQ(single.states.size(), 1U);
    EXPECT_EQ(single.states[0], SpinVector{-1});

    const auto pair = brute_force_solve(IsingModel({0.0, 0.0}, {{{0, 1}, -1.0}}, 0.0));
    EXPECT_DOUBLE_EQ(pair.energy, -1.0);
    ASSERT_EQ(pair.states.size(), 2U);
    EXPECT_EQ(pair.states[0], (SpinVector{-1, -1}));
    EXPECT_EQ(pair.states[1], (SpinVector{1, 1}));
}

TEST(BruteForce, CapacityCap) {
    const IsingModel big(std::vector<double>(27, 0.0), {}, 0.0);
    EXPECT_THROW(brute_force_solve(big), CapacityError);
    const IsingModel small(std::vector<double>(5, 0.0), {}, 0.0);
    EXPECT_THROW(brute_force_solve(small, 4), CapacityError);
}

TEST(BruteForce, MatchesNaiveEnumerator) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        // Small integer weights give real degeneracies.
        const bool integer = trial % 2 == 0;
        const IsingModel m = oracle::random_ising(2 + trial % 9, rng, 0.7, integer);
        const auto report = brute_force_solve(m);
        const auto oracle = oracle::naive_ground(m);
        EXPECT_NEAR(report.energy, oracle.energy, 1e-9);
        EXPECT_EQ(report.states, oracle.states);
    }
}

TEST(BruteForce, ReportInvariants) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const IsingModel m = oracle::random_ising(9, rng, 0.5, true);
        const auto report = brute_force_solve(m);
        ASSERT_FALSE(report.states.empty());
        for (const auto &s : report.states) {
            EXPECT_NEAR(energy_ising(m, s), report.energy, 1e-12);
            // No single flip lowers a ground state.
            for (std::size_t i = 0; i < s.size(); ++i) {
                SpinVector t = s;
                t[i] = static_cast<Spin>(-t[i]);
                EXPECT_GE(energy_ising(m, t), report.energy - 1e-12);
            }
        }
        // Lower bound over random states.
        for (int k = 0; k < 200; ++k) {
            SpinVector s = spins_from_index(rng() & 0x1FF, 9);
            EXPECT_GE(energy_ising(m, s), report.energy - 1e-12);
        }
    }
}

TEST(BruteForce, ZeroModelIsFullyDegenerate) {
    const auto report = brute_force_solve(IsingModel(std::vector<double>(4, 0.0), {}, 0.5));
    EXPECT_DOUBLE_EQ(report.energy, 0.5);
    EXPECT_EQ(report.states.size(), 16U);
}

TEST(SpinIndex, RoundTrip) {
    for (std::uint64_t x : {0ULL, 1ULL, 5ULL, 1023ULL})
        EXPECT_EQ(index_from_spins(spins_from_index(x, 10)), x);
}
