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
#include <string>
#include <utility>
#include <vector>

#include "chainbreak/ising.hpp"

namespace chainbreak {

// Position of a qubit inside a Chimera lattice. Shore 0 qubits couple
// vertically to the same index in the cells above and below; shore 1
// qubits couple horizontally. Every shore 0 qubit couples to every shore 1
// qubit of its own cell.
struct QubitCoord {
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t shore = 0;
    std::size_t index = 0;

    bool operator==(const QubitCoord &) const = default;
};

// M x N grid of K_{L,L} unit cells. Qubit ids follow
//   id = ((row * N + col) * 2 + shore) * L + index.
// Adjacency is computed from coordinates, so the graph holds no edge lists.
class ChimeraGraph {
  public:
    ChimeraGraph(std::size_t rows, std::size_t cols, std::size_t shore_size = 4);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t shore_size() const { return shore_; }
    std::size_t num_qubits() const { return 2 * shore_ * rows_ * cols_; }
    std::size_t num_edges() const;

    std::size_t qubit(const QubitCoord &c) const;
    QubitCoord coord(std::size_t qubit) const;

    bool has_edge(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> neighbors(std::size_t qubit) const;
    std::size_t degree(std::size_t qubit) const { return neighbors(qubit).size(); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const ChimeraGraph &) const = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t shore_;
};

ChimeraGraph build_chimera(std::size_t rows, std::size_t cols, std::size_t shore_size = 4);

using Chain = std::vector<std::size_t>;

// Chain i holds the hardware qubits standing in for logical spin i, in the
// order used to lay down intra-chain couplers.
class Embedding {
  public:
    Embedding(ChimeraGraph graph, std::vector<Chain> chains);

    const ChimeraGraph &graph() const { return graph_; }
    const std::vector<Chain> &chains() const { return chains_; }
    const Chain &chain(std::size_t i) const { return chains_.at(i); }
    std::size_t size() const { return chains_.size(); }

    bool operator==(const Embedding &) const = default;

  private:
    ChimeraGraph graph_;
    std::vector<Chain> chains_;
};

struct CliqueOptions {
    // Cell of the top-left corner of the layout.
    std::size_t row_offset = 0;
    std::size_t col_offset = 0;
};

// Triangle clique embedding of K_n, n = t L, in a t x t block of cells.
// Logical spin i = b L + k owns the shore 0 qubits of index k in column b,
// rows 0..b, followed by the shore 1 qubits of index k in row b, columns
// b..t-1. The two halves meet inside cell (b, b), so each chain is a path of
// t + 1 qubits, and chains b1 <= b2 touch inside cell (b1, b2).
Embedding clique_embed(std::size_t n, const ChimeraGraph &graph, CliqueOptions options = {});

// Number of cells per side the clique layout needs for n spins.
std::size_t clique_cells_required(std::size_t n, std::size_t shore_size);

enum class ViolationKind {
    QubitOutOfRange,
    EmptyChain,
    SharedQubit,
    DisconnectedChain,
    MissingCoupling,
    ChainCountMismatch,
};

struct Violation {
    ViolationKind kind;
    std::size_t chain = 0;
    std::size_t other = 0;  // second chain or qubit, when relevant
    std::string message;
};

// Empty result iff chains are in range, nonempty, pairwise disjoint, each
// connected in the hardware graph, and every listed logical edge is backed
// by at least one hardware edge between the two chains.
std::vector<Violation> validate_embedding(const Embedding &e, std::span<const VarPair> logical_edges,
                                          std::size_t logical_size);
std::vector<Violation> validate_embedding(const Embedding &e, const IsingModel &logical);

// All pairs of K_n.
std::vector<VarPair> complete_graph_edges(std::size_t n);

std::string to_string(ViolationKind kind);

}  // namespace chainbreak
