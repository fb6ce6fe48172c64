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

#include "chainbreak/portfolio.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "chainbreak/error.hpp"
#include "chainbreak/rng.hpp"

namespace chainbreak {

double SuiteConfig::allocation_unit() const {
    return std::ldexp(1.0, -static_cast<int>(granularity) + 1);
}

void SuiteConfig::validate() const {
    if (assets < 1)
        throw ConfigError("asset count must be at least 1");
    if (granularity < 1 || granularity > 52)
        throw ConfigError(fmt::format("granularity {} outside [1, 52]", granularity));
    if (price_points < 2)
        throw ConfigError("at least two price points are required");
    if (!(volatility >= 0.0 && volatility < 1.0))
        throw ConfigError(fmt::format("volatility {} outside [0, 1)", volatility));
    if (theta.returns < 0 || theta.budget < 0 || theta.risk < 0)
        throw ConfigError("theta weights must be nonnegative");
    if (!(initial_price_min > 0.0 && initial_price_min <= initial_price_max))
        throw ConfigError("initial price range must be positive and ordered");
}

PriceData price_statistics(std::vector<std::vector<double>> prices, double allocation_unit) {
    PriceData data;
    const std::size_t m = prices.size();
    const std::size_t points = m == 0 ? 0 : prices.front().size();
    if (points < 2)
        throw ConfigError("at least two price points are required");

    std::vector<double> mean(m, 0.0);
    data.returns.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (prices[i].size() != points)
            throw DimensionError("price series have unequal lengths");
        for (std::size_t l = 0; l < points; ++l) {
            if (!(prices[i][l] > 0.0))
                throw ValueError(fmt::format("price [{}][{}] is not positive", i, l));
            mean[i] += prices[i][l];
        }
        mean[i] /= static_cast<double>(points);
        for (std::size_t l = 0; l + 1 < points; ++l)
            data.returns[i] += (prices[i][l + 1] - prices[i][l]) / prices[i][l];
        data.returns[i] /= static_cast<double>(points - 1);
    }

    const double scale = allocation_unit * allocation_unit / static_cast<double>(points - 1);
    data.covariance.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double sum = 0.0;
            for (std::size_t l = 0; l < points; ++l)
                sum += (prices[i][l] - mean[i]) * (prices[j][l] - mean[j]);
            data.covariance[i][j] = data.covariance[j][i] = scale * sum;
        }
    }
    data.prices = std::move(prices);
    return data;
}

PriceData generate_prices(const SuiteConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    std::vector<std::vector<double>> prices(cfg.assets, std::vector<double>(cfg.price_points));
    for (auto &series : prices) {
        series[0] = uniform(rng, cfg.initial_price_min, cfg.initial_price_max);
        for (std::size_t l = 1; l < series.size(); ++l)
            series[l] = series[l - 1] * (1.0 + uniform(rng, -cfg.volatility, cfg.volatility));
    }
    return price_statistics(std::move(prices), cfg.allocation_unit());
}

// Expanding the objective with x^2 = x over binaries. With weight w_u = 2^(k-1)
// of variable u on asset a(u):
//   (sum_u w_u b p_w x_u - b)^2 = sum_u (w_u^2 b^2 p_w^2 - 2 w_u b^2 p_w) x_u
//                                + 2 sum_{u<v} w_u w_v b^2 p_w^2 x_u x_v + b^2
//   sum_{u,v} w_u w_v c x_u x_v = sum_u w_u^2 c_aa x_u + 2 sum_{u<v} w_u w_v c x_u x_v
Qubo build_qubo(const SuiteConfig &cfg, const PriceData &data) {
    cfg.validate();
    const std::size_t m = cfg.assets;
    const std::size_t w = cfg.granularity;
    if (data.returns.size() != m || data.covariance.size() != m)
        throw DimensionError(fmt::format("price data covers {} assets, config has {}",
                                         data.returns.size(), m));
    for (const auto &row : data.covariance)
        if (row.size() != m)
            throw DimensionError("covariance matrix is not square");

    const double b = cfg.budget;
    const double unit = cfg.allocation_unit();
    const auto &theta = cfg.theta;
    const std::size_t n = m * w;

    auto asset = [w](std::size_t u) { return u / w; };
    auto weight = [w](std::size_t u) { return std::ldexp(1.0, static_cast<int>(u % w)); };

    std::vector<double> q(n);
    for (std::size_t u = 0; u < n; ++u) {
        const double wu = weight(u);
        const std::size_t a = asset(u);
        q[u] = -theta.returns * wu * data.returns[a]
               + theta.budget * (wu * wu * b * b * unit * unit - 2.0 * wu * b * b * unit)
               + theta.risk * wu * wu * data.covariance[a][a];
    }
    PairWeights Q;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double ww = weight(u) * weight(v);
            const double value = 2.0 * ww
                                 * (theta.budget * b * b * unit * unit
                                    + theta.risk * data.covariance[asset(u)][asset(v)]);
            if (value != 0.0)
                Q[{u, v}] = value;
        }
    }
    return Qubo(std::move(q), std::move(Q), theta.budget * b * b);
}

IsingModel normalize(const IsingModel &model) {
    double scale = 0.0;
    for (double h : model.h())
        scale = std::max(scale, std::abs(h));
    for (const auto &[key, value] : model.J())
        scale = std::max(scale, std::abs(value));
    if (scale == 0.0)
        return model;
    std::vector<double> h = model.h();
    for (double &x : h)
        x /= scale;
    PairWeights J;
    for (const auto &[key, value] : model.J())
        J[key] = value / scale;
    return IsingModel(std::move(h), std::move(J), model.beta() / scale);
}

std::uint64_t instance_seed(const SuiteConfig &cfg, std::size_t index) {
    return mix_seed(cfg.seed, index);
}

IsingModel generate_instance(const SuiteConfig &cfg, std::size_t index) {
    SuiteConfig instance = cfg;
    instance.seed = instance_seed(cfg, index);
    return normalize(qubo_to_ising(build_qubo(instance, generate_prices(instance))));
}

std::vector<IsingModel> generate_suite(const SuiteConfig &cfg, std::size_t count) {
    cfg.validate();
    std::vector<IsingModel> suite;
    suite.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        suite.push_back(generate_instance(cfg, i));
    return suite;
}

}  // namespace chainbreak
