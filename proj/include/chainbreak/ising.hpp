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
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace chainbreak {

using Spin = std::int8_t;
using SpinVector = std::vector<Spin>;
using BinaryVector = std::vector<std::uint8_t>;

// Unordered variable pair, always stored with first < second.
using VarPair = std::pair<std::size_t, std::size_t>;
using PairWeights = std::map<VarPair, double>;

constexpr double kEnergyTolerance = 1e-9;

// Returns the canonical (min, max) pair; throws ValueError for i == j.
VarPair canonical_pair(std::size_t i, std::size_t j);

// Adds `value` to the weight of the unordered pair {i, j}.
void add_pair(PairWeights &weights, std::size_t i, std::size_t j, double value);

// Pairwise model over n variables: linear terms, one weight per unordered
// pair and a constant offset. Immutable after construction. Pairs given as
// (j, i) with j > i are normalized and merged with (i, j).
class QuadraticModel {
  public:
    QuadraticModel() = default;
    QuadraticModel(std::vector<double> linear, PairWeights pairs, double offset);

    std::size_t size() const { return linear_.size(); }
    const std::vector<double> &linear() const { return linear_; }
    const PairWeights &pairs() const { return pairs_; }
    double offset() const { return offset_; }

    // Weight of {i, j}, zero when absent.
    double pair(std::size_t i, std::size_t j) const;

    bool operator==(const QuadraticModel &) const = default;

  private:
    std::vector<double> linear_;
    PairWeights pairs_;
    double offset_ = 0.0;
};

// E(x) = sum q_i x_i + sum_{i<j} Q_ij x_i x_j + gamma, x_i in {0, 1}.
class Qubo : public QuadraticModel {
  public:
    using QuadraticModel::QuadraticModel;
    const std::vector<double> &q() const { return linear(); }
    const PairWeights &Q() const { return pairs(); }
    double gamma() const { return offset(); }
};

// E(s) = sum h_i s_i + sum_{i<j} J_ij s_i s_j + beta, s_i in {-1, +1}.
class IsingModel : public QuadraticModel {
  public:
    using QuadraticModel::QuadraticModel;
    const std::vector<double> &h() const { return linear(); }
    const PairWeights &J() const { return pairs(); }
    double beta() const { return offset(); }
};

struct GroundStateReport {
    double energy = 0.0;
    // Every minimizer, ordered by the binary index sum_i [s_i = +1] 2^i.
    std::vector<SpinVector> states;
};

double energy_ising(const IsingModel &model, std::span<const Spin> s);
double energy_qubo(const Qubo &model, std::span<const std::uint8_t> x);

IsingModel qubo_to_ising(const Qubo &model);
Qubo ising_to_qubo(const IsingModel &model);

constexpr std::size_t kDefaultBruteForceCap = 26;

// Exhaustive minimization over all 2^n spin states (Gray-code order, O(n)
// per state). States whose energy is within kEnergyTolerance of the minimum
// are all reported.
GroundStateReport brute_force_solve(const IsingModel &model,
                                    std::size_t max_spins = kDefaultBruteForceCap);

// Spin state with bit i of `index` mapped to s_i = +1 when set.
SpinVector spins_from_index(std::uint64_t index, std::size_t n);
std::uint64_t index_from_spins(std::span<const Spin> s);

}  // namespace chainbreak
