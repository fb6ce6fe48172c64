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
#include <vector>

#include "chainbreak/ising.hpp"

namespace chainbreak {

// Weights of the three objective terms: expected return (maximized),
// squared budget violation (penalized) and covariance risk (penalized).
struct Theta {
    double returns = 1.0;
    double budget = 10.0;
    double risk = 1.0;
};

struct SuiteConfig {
    std::size_t assets = 2;         // m
    std::size_t granularity = 4;    // w, bits per asset
    double budget = 1.0;            // b
    std::size_t price_points = 20;  // N_f
    Theta theta;
    std::uint64_t seed = 0;
    double volatility = 0.25;
    double initial_price_min = 1.0;
    double initial_price_max = 100.0;

    std::size_t variables() const { return assets * granularity; }
    // Smallest allocation fraction p_w = 1 / 2^(w-1).
    double allocation_unit() const;
    void validate() const;
};

struct PriceData {
    std::vector<std::vector<double>> prices;      // assets x price points
    std::vector<double> returns;                  // mean per-step fractional change
    std::vector<std::vector<double>> covariance;  // p_w^2-scaled sample covariance of prices
};

// Random-walk prices: a uniform starting price, then each step scales the
// previous price by (1 + u) with u uniform on [-volatility, +volatility].
PriceData generate_prices(const SuiteConfig &cfg);

// Returns and covariance for a given price matrix.
PriceData price_statistics(std::vector<std::vector<double>> prices, double allocation_unit);

// Binary-expansion QUBO of the portfolio objective. Variable a*w + (k-1) is
// bit k of asset a with weight 2^(k-1); minimizing the QUBO maximizes
//   theta1 sum r x - theta2 (sum b p_w x - b)^2 - theta3 sum c x x.
Qubo build_qubo(const SuiteConfig &cfg, const PriceData &data);

// Scales h, J and beta so that max(|h|, |J|) == 1. A zero model is returned unchanged.
IsingModel normalize(const IsingModel &model);

// Seed of suite instance `index`: mix_seed(cfg.seed, index).
std::uint64_t instance_seed(const SuiteConfig &cfg, std::size_t index);

// One normalized Ising instance per index, each from fresh price data.
IsingModel generate_instance(const SuiteConfig &cfg, std::size_t index);
std::vector<IsingModel> generate_suite(const SuiteConfig &cfg, std::size_t count);

}  // namespace chainbreak
