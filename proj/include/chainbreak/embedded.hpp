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
#include <span>
#include <vector>

#include "chainbreak/chimera.hpp"
#include "chainbreak/ising.hpp"

namespace chainbreak {

// Coupler between two active qubits, addressed by local index (position in
// EmbeddedModel::qubits()). `intra` marks chain couplers carrying k.
struct PhysicalCoupler {
    std::size_t a = 0;
    std::size_t b = 0;
    double value = 0.0;
    bool intra = false;
};

// Physical Ising model of a logical model placed on an embedding. Only
// qubits that belong to a chain are active; they are numbered locally in
// ascending hardware id order. The physical energy carries the logical
// offset, so an unbroken configuration decoding to s has energy
//   E_logical(s) + k * intra_edge_count().
class EmbeddedModel {
  public:
    EmbeddedModel(IsingModel logical, Embedding embedding, double chain_strength,
                  std::vector<std::size_t> qubits, std::vector<double> h,
                  std::vector<PhysicalCoupler> couplers);

    const IsingModel &logical() const { return logical_; }
    const Embedding &embedding() const { return embedding_; }
    double chain_strength() const { return chain_strength_; }

    const std::vector<std::size_t> &qubits() const { return qubits_; }
    const std::vector<double> &h() const { return h_; }
    const std::vector<PhysicalCoupler> &couplers() const { return couplers_; }
    std::size_t num_qubits() const { return qubits_.size(); }
    std::size_t intra_edge_count() const;

    // Local indices of chain i, in chain order.
    const std::vector<std::size_t> &chain_slots(std::size_t i) const { return slots_.at(i); }
    const std::vector<std::vector<std::size_t>> &chain_slots() const { return slots_; }

    // Local index of a hardware qubit; throws DataError if inactive.
    std::size_t local_index(std::size_t qubit) const;

    // Physical model over local indices.
    const IsingModel &physical() const { return physical_; }
    double energy(std::span<const Spin> spins) const { return energy_ising(physical_, spins); }

    // Physical configuration with every chain set to its logical spin value.
    SpinVector expand(std::span<const Spin> logical_spins) const;

  private:
    IsingModel logical_;
    Embedding embedding_;
    double chain_strength_;
    std::vector<std::size_t> qubits_;
    std::vector<double> h_;
    std::vector<PhysicalCoupler> couplers_;
    std::vector<std::vector<std::size_t>> slots_;
    IsingModel physical_;
};

// Spreads each bias evenly over its chain, splits each logical coupling
// evenly over the hardware edges joining the two chains, and places k on the
// edges of a breadth-first spanning tree of each chain, rooted at chain
// position 0 (for a path in chain order, the path itself).
EmbeddedModel embed_model(const IsingModel &logical, const Embedding &embedding,
                          double chain_strength);

}  // namespace chainbreak
