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

#include <random>

#include <gtest/gtest.h>

#include "chainbreak/error.hpp"

using namespace chainbreak;

namespace {

ChainReadout readout(SpinVector values, std::size_t chain = 0) {
    ChainReadout r;
    r.chain = chain;
    r.broken = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end();
    r.values = std::move(values);
    return r;
}

// Three chains of length 3 over qubits 0..8, chain i at slots 3i..3i+2.
ChainLayout three_by_three() {
    return ChainLayout({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, 9);
}

SpinVector random_spins(std::size_t n, std::mt19937_64 &rng) {
    SpinVector s(n);
    for (auto &v : s)
        v = (rng() & 1U) ? 1 : -1;
    return s;
}

}  // namespace

TEST(DetectBreaks, Flags) {
    const ChainLayout layout({{0, 1, 2}}, 3);
    EXPECT_FALSE(detect_breaks(SpinVector{1, 1, 1}, layout)[0].broken);
    EXPECT_TRUE(detect_breaks(SpinVector{1, -1, 1}, layout)[0].broken);
    const auto unanimous = detect_breaks(SpinVector{1, 1, 1, -1, -1, -1, 1, 1, 1}, three_by_three());
    EXPECT_TRUE(std::none_of(unanimous.begin(), unanimous.end(), [](auto &r) { return r.broken; }));
    EXPECT_EQ(*decode_discard(unanimous), (SpinVector{1, -1, 1}));
}

TEST(DetectBreaks, MissingValues) {
    EXPECT_THROW(detect_breaks(SpinVector{1, 1}, ChainLayout({{0, 1, 2}}, 3)), DataError);
    const ChimeraGraph g = build_chimera(2, 2, 4);
    const Embedding e = clique_embed(4, g);
    std::vector<std::size_t> qubits{e.chain(0)[0]};
    EXPECT_THROW(ChainLayout(e, qubits), DataError);
    EXPECT_THROW(ChainLayout({{0, 5}}, 3), DataError);
}

TEST(Discard, Examples) {
    const auto layout = three_by_three();
    EXPECT_TRUE(decode_discard(detect_breaks(SpinVector{1, 1, 1, 1, 1, 1, -1, -1, -1}, layout)));
    EXPECT_FALSE(decode_discard(detect_breaks(SpinVector{1, 1, 1, 1, -1, 1, -1, -1, -1}, layout)));
    EXPECT_FALSE(decode_discard(detect_breaks(SpinVector{1, -1, 1, 1, -1, 1, -1, 1, -1}, layout)));

    // One broken chain among twenty.
    std::vector<std::vector<std::size_t>> slots;
    for (std::size_t i = 0; i < 20; ++i)
        slots.push_back({2 * i, 2 * i + 1});
    SpinVector s(40, 1);
    s[13] = -1;
    EXPECT_FALSE(decode_discard(detect_breaks(s, ChainLayout(slots, 40))));
}

TEST(Majority, Examples) {
    EXPECT_EQ(majority_value(readout({1, 1, -1})), 1);
    EXPECT_EQ(majority_value(readout({-1, -1, -1})), -1);
    const FaultProfile profile({{0.1, 0.9}}, 10);
    EXPECT_EQ(majority_value(readout({1, -1}), &profile), 1);
    EXPECT_EQ(majority_value(readout({-1, 1}), &profile), -1);
    // Without a profile the first position wins a tie.
    EXPECT_EQ(majority_value(readout({-1, 1})), -1);
    // Equal lowest faults on both values fall back to the first position.
    const FaultProfile flat({{0.3, 0.3, 0.5, 0.5}}, 10);
    EXPECT_EQ(majority_value(readout({-1, 1, 1, -1}), &flat), -1);
}

TEST(Majority, MatchesCountingOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t len = 2 + rng() % 5;
        const SpinVector values = random_spins(len, rng);
        std::size_t plus = 0;
        std::size_t minus = 0;
        for (Spin v : values)
            (v > 0 ? plus : minus)++;
        const Spin expected = plus > minus ? 1 : minus > plus ? -1 : values[0];
        ASSERT_EQ(majority_value(readout(values)), expected);
    }
}

TEST(Weighted, HandScores) {
    const auto w = weighted_scores(SpinVector{1, 1, -1}, std::vector<double>{0.5, 0.2, 0.9});
    EXPECT_NEAR(w.plus, 0.81, 1e-15);
    EXPECT_NEAR(w.minus, 0.01, 1e-15);
    EXPECT_EQ(weighted_value(readout({1, 1, -1}), FaultProfile({{0.5, 0.2, 0.9}}, 4)), 1);

    const auto edge = weighted_scores(SpinVector{1, -1}, std::vector<double>{0.0, 1.0});
    EXPECT_EQ(edge.plus, 1.0);
    EXPECT_EQ(edge.minus, 0.0);
    EXPECT_EQ(weighted_value(readout({1, -1}), FaultProfile({{0.0, 1.0}}, 4)), 1);
}

TEST(Weighted, OverrulesMajorityWhenFaultsConcentrate) {
    // Two faulty spins agree on -1; a reliable spin says +1.
    const FaultProfile profile({{0.9, 0.8, 0.05}}, 20);
    EXPECT_EQ(majority_value(readout({-1, -1, 1})), -1);
    EXPECT_EQ(weighted_value(readout({-1, -1, 1}), profile), 1);
}

TEST(Weighted, RejectsOutOfRangeProfile) {
    EXPECT_THROW(weighted_scores(SpinVector{1, -1}, std::vector<double>{0.5, 1.5}), ValueError);
    EXPECT_THROW(FaultProfile({{0.5, -0.1}}, 1), ValueError);
    EXPECT_THROW(weighted_scores(SpinVector{1}, std::vector<double>{0.5, 0.5}), DimensionError);
    EXPECT_THROW(weighted_value(readout({1, -1}, 3), FaultProfile({{0.5, 0.5}}, 1)), DataError);
}

TEST(Weighted, DecisionComparesOpposingProducts) {
    // W(+) > W(-) exactly when the product over -1 spins exceeds the product
    // over +1 spins.
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> p(0.01, 0.99);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t len = 2 + rng() % 5;
        const SpinVector values = random_spins(len, rng);
        std::vector<double> faults(len);
        for (auto &x : faults)
            x = p(rng);
        double plus = 1.0;
        double minus = 1.0;
        for (std::size_t l = 0; l < len; ++l)
            (values[l] > 0 ? plus : minus) *= faults[l];
        if (std::abs(plus - minus) < 1e-12)
            continue;
        const auto w = weighted_scores(values, faults);
        ASSERT_EQ(w.plus > w.minus, minus > plus);
    }
}

TEST(Weighted, ScalingInvarianceWithBalancedVotes) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> p(0.01, 0.99);
    std::uniform_real_distribution<double> scale(0.05, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t half = 1 + rng() % 3;
        SpinVector values(2 * half, 1);
        std::fill(values.begin() + half, values.end(), -1);
        std::shuffle(values.begin(), values.end(), rng);
        std::vector<double> faults(values.size());
        for (auto &x : faults)
            x = p(rng);
        const auto before = weighted_scores(values, faults);
        if (std::abs(before.plus - before.minus) < 1e-9)
            continue;
        const double c = scale(rng);
        for (auto &x : faults)
            x *= c;
        const auto after = weighted_scores(values, faults);
        ASSERT_EQ(before.plus > before.minus, after.plus > after.minus);
    }
}

TEST(Weighted, ScalingCanFlipUnbalancedVotes) {
    // One +1 spin against two -1 spins: the decision depends on absolute scale.
    const SpinVector values{1, -1, -1};
    const auto before = weighted_scores(values, std::vector<double>{0.5, 0.8, 0.8});
    const auto after = weighted_scores(values, std::vector<double>{0.25, 0.4, 0.4});
    EXPECT_GT(before.plus, before.minus);
    EXPECT_LT(after.plus, after.minus);
}

TEST(Strategies, PreserveUnanimity) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> p(0.0, 1.0);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t len = 1 + rng() % 6;
        const Spin value = (rng() & 1U) ? 1 : -1;
        const ChainReadout r = readout(SpinVector(len, value));
        std::vector<double> faults(len);
        for (auto &x : faults)
            x = trial % 10 == 0 ? 1.0 : p(rng);
        const FaultProfile profile({faults}, 1);
        ASSERT_EQ(majority_value(r), value);
        ASSERT_EQ(majority_value(r, &profile), value);
        ASSERT_EQ(weighted_value(r, profile), value);
        ASSERT_EQ((*decode_discard(std::vector<ChainReadout>{r}))[0], value);
    }
}

TEST(FaultProfileEstimate, CountsAgainstGround) {
    const ChainLayout layout({{0, 1}}, 2);
    GroundStateReport ground{-1.0, {SpinVector{1}}};
    // Two broken samples; position 1 faulty in both, position 0 in neither.
    const std::vector<SpinVector> samples{{1, -1}, {1, -1}, {1, 1}};
    const auto profile = estimate_fault_profile(samples, layout, ground);
    ASSERT_TRUE(profile);
    EXPECT_EQ(profile->broken_samples(), 2U);
    EXPECT_EQ(profile->chain(0)[0], 0.0);
    EXPECT_EQ(profile->chain(0)[1], 1.0);

    const ChainLayout two({{0, 1}, {2, 3, 4}}, 5);
    GroundStateReport g2{0.0, {SpinVector{1, -1}}};
    // Chain 1 position 2 is faulty in exactly one of two broken samples.
    const std::vector<SpinVector> mixed{{1, -1, -1, -1, 1}, {1, -1, -1, -1, -1}, {1, 1, -1, -1, -1}};
    const auto p2 = estimate_fault_profile(mixed, two, g2);
    ASSERT_TRUE(p2);
    EXPECT_EQ(p2->broken_samples(), 2U);
    EXPECT_EQ(p2->chain(1)[2], 0.5);
    EXPECT_EQ(p2->chain(1)[0], 0.0);
}

TEST(FaultProfileEstimate, NoBrokenSamplesIsEmpty) {
    const ChainLayout layout({{0, 1}}, 2);
    GroundStateReport ground{-1.0, {SpinVector{1}}};
    const std::vector<SpinVector> samples{{1, 1}, {-1, -1}};
    EXPECT_FALSE(estimate_fault_profile(samples, layout, ground));
}

TEST(FaultProfileEstimate, NearestOfDegenerateGroundStates) {
    const ChainLayout layout({{0, 1, 2}, {3, 4, 5}}, 6);
    GroundStateReport ground{-1.0, {SpinVector{-1, -1}, SpinVector{1, 1}}};
    // Majority decodes to (+1, +1), so the second ground state is the reference.
    const std::vector<SpinVector> samples{{1, 1, -1, 1, 1, 1}};
    const auto profile = estimate_fault_profile(samples, layout, ground);
    ASSERT_TRUE(profile);
    EXPECT_EQ(profile->chain(0), (std::vector<double>{0.0, 0.0, 1.0}));
    EXPECT_EQ(profile->chain(1), (std::vector<double>{0.0, 0.0, 0.0}));
    // Equidistant states resolve to the first listed.
    EXPECT_EQ(nearest_ground_state(SpinVector{1, -1}, ground), ground.states[0]);
}

TEST(FaultProfileEstimate, PlantedEndpointFaults) {
    std::mt19937_64 rng(53);
    std::vector<std::vector<std::size_t>> slots;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        slots.emplace_back();
        for (std::size_t l = 0; l < 4; ++l)
            slots.back().push_back(next++);
    }
    const ChainLayout layout(slots, next);
    const SpinVector logical = random_spins(8, rng);
    GroundStateReport ground{0.0, {logical}};
    std::bernoulli_distribution endpoint(0.3);
    std::bernoulli_distribution interior(0.05);
    std::vector<SpinVector> samples;
    for (int s = 0; s < 3000; ++s) {
        SpinVector phys(next);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t l = 0; l < 4; ++l) {
                const bool end = l == 0 || l == 3;
                const bool fault = end ? endpoint(rng) : interior(rng);
                phys[slots[i][l]] = static_cast<Spin>(fault ? -logical[i] : logical[i]);
            }
        samples.push_back(phys);
    }
    const auto profile = estimate_fault_profile(samples, layout, ground);
    ASSERT_TRUE(profile);
    for (std::size_t i = 0; i < 8; ++i) {
        const auto &p = profile->chain(i);
        const double best = *std::max_element(p.begin(), p.end());
        EXPECT_TRUE(p.front() == best || p.back() == best) << "chain " << i;
        EXPECT_GT(std::min(p.front(), p.back()), std::max(p[1], p[2]));
    }
}

TEST(DecodeSamples, DiscardMatchesBreakStatistic) {
    std::mt19937_64 rng(59);
    const auto layout = three_by_three();
    std::vector<SpinVector> samples;
    for (int s = 0; s < 500; ++s)
        samples.push_back(random_spins(9, rng));
    const auto decoded = decode_samples(samples, layout, Strategy::Discard);
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto readouts = detect_breaks(samples[s], layout);
        const bool any = std::any_of(readouts.begin(), readouts.end(), [](auto &r) { return r.broken; });
        EXPECT_EQ(decoded.samples[s].discarded(), any);
        EXPECT_EQ(decoded.samples[s].broken_chains > 0, any);
    }
}

TEST(DecodeSamples, WeightedNeedsProfileOnlyForBrokenSamples) {
    const auto layout = three_by_three();
    const std::vector<SpinVector> clean{{1, 1, 1, -1, -1, -1, 1, 1, 1}};
    const auto decoded = decode_samples(clean, layout, Strategy::Weighted);
    EXPECT_EQ(*decoded.samples[0].state, (SpinVector{1, -1, 1}));
    const std::vector<SpinVector> broken{{1, -1, 1, -1, -1, -1, 1, 1, 1}};
    EXPECT_THROW(decode_samples(broken, layout, Strategy::Weighted), DataError);
}

TEST(Strategy, Names) {
    for (Strategy s : {Strategy::Discard, Strategy::Majority, Strategy::Weighted})
        EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_THROW(parse_strategy("greedy"), ConfigError);
}
