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

#include "chainbreak/chimera.hpp"

#include <algorithm>
#include <limits>

#include <fmt/core.h>

#include "chainbreak/error.hpp"

namespace chainbreak {

ChimeraGraph::ChimeraGraph(std::size_t rows, std::size_t cols, std::size_t shore_size)
    : rows_(rows), cols_(cols), shore_(shore_size) {
    if (rows == 0 || cols == 0 || shore_size == 0)
        throw ConfigError(fmt::format("Chimera dimensions {}x{}x{} must be positive", rows, cols,
                                      shore_size));
}

ChimeraGraph build_chimera(std::size_t rows, std::size_t cols, std::size_t shore_size) {
    return ChimeraGraph(rows, cols, shore_size);
}

std::size_t ChimeraGraph::num_edges() const {
    return shore_ * shore_ * rows_ * cols_ + shore_ * (rows_ - 1) * cols_
           + shore_ * rows_ * (cols_ - 1);
}

std::size_t ChimeraGraph::qubit(const QubitCoord &c) const {
    if (c.row >= rows_ || c.col >= cols_ || c.shore > 1 || c.index >= shore_)
        throw DimensionError(fmt::format("coordinate ({}, {}, {}, {}) outside {}x{}x{} Chimera",
                                         c.row, c.col, c.shore, c.index, rows_, cols_, shore_));
    return ((c.row * cols_ + c.col) * 2 + c.shore) * shore_ + c.index;
}

QubitCoord ChimeraGraph::coord(std::size_t qubit) const {
    if (qubit >= num_qubits())
        throw DimensionError(fmt::format("qubit {} outside graph of {} qubits", qubit, num_qubits()));
    QubitCoord c;
    c.index = qubit % shore_;
    qubit /= shore_;
    c.shore = qubit % 2;
    qubit /= 2;
    c.col = qubit % cols_;
    c.row = qubit / cols_;
    return c;
}

bool ChimeraGraph::has_edge(std::size_t a, std::size_t b) const {
    if (a >= num_qubits() || b >= num_qubits() || a == b)
        return false;
    const QubitCoord ca = coord(a);
    const QubitCoord cb = coord(b);
    if (ca.row == cb.row && ca.col == cb.col)
        return ca.shore != cb.shore;
    if (ca.shore != cb.shore || ca.index != cb.index)
        return false;
    auto gap = [](std::size_t x, std::size_t y) { return x > y ? x - y : y - x; };
    if (ca.shore == 0)
        return ca.col == cb.col && gap(ca.row, cb.row) == 1;
    return ca.row == cb.row && gap(ca.col, cb.col) == 1;
}

std::vector<std::size_t> ChimeraGraph::neighbors(std::size_t qubit) const {
    const QubitCoord c = coord(qubit);
    std::vector<std::size_t> out;
    out.reserve(shore_ + 2);
    for (std::size_t k = 0; k < shore_; ++k)
        out.push_back(this->qubit({c.row, c.col, 1 - c.shore, k}));
    if (c.shore == 0) {
        if (c.row > 0)
            out.push_back(this->qubit({c.row - 1, c.col, 0, c.index}));
        if (c.row + 1 < rows_)
            out.push_back(this->qubit({c.row + 1, c.col, 0, c.index}));
    } else {
        if (c.col > 0)
            out.push_back(this->qubit({c.row, c.col - 1, 1, c.index}));
        if (c.col + 1 < cols_)
            out.push_back(this->qubit({c.row, c.col + 1, 1, c.index}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ChimeraGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(num_edges());
    for (std::size_t q = 0; q < num_qubits(); ++q)
        for (std::size_t nb : neighbors(q))
            if (nb > q)
                out.emplace_back(q, nb);
    return out;
}

Embedding::Embedding(ChimeraGraph graph, std::vector<Chain> chains)
    : graph_(graph), chains_(std::move(chains)) {}

std::size_t clique_cells_required(std::size_t n, std::size_t shore_size) {
    if (n == 0 || n % shore_size != 0)
        throw ConfigError(fmt::format("clique embedding needs a positive multiple of {} spins, got {}",
                                      shore_size, n));
    return n / shore_size;
}

Embedding clique_embed(std::size_t n, const ChimeraGraph &graph, CliqueOptions options) {
    const std::size_t shore = graph.shore_size();
    const std::size_t t = clique_cells_required(n, shore);
    if (options.row_offset + t > graph.rows() || options.col_offset + t > graph.cols())
        throw CapacityError(fmt::format(
            "K_{} needs a {}x{} block of cells at ({}, {}); graph has {}x{} cells", n, t, t,
            options.row_offset, options.col_offset, graph.rows(), graph.cols()));

    const std::size_t r0 = options.row_offset;
    const std::size_t c0 = options.col_offset;
    std::vector<Chain> chains(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t block = i / shore;
        const std::size_t k = i % shore;
        Chain &chain = chains[i];
        chain.reserve(t + 1);
        for (std::size_t r = 0; r <= block; ++r)
            chain.push_back(graph.qubit({r0 + r, c0 + block, 0, k}));
        for (std::size_t c = block; c < t; ++c)
            chain.push_back(graph.qubit({r0 + block, c0 + c, 1, k}));
    }
    return Embedding(graph, std::move(chains));
}

std::vector<VarPair> complete_graph_edges(std::size_t n) {
    std::vector<VarPair> out;
    out.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::QubitOutOfRange: return "qubit-out-of-range";
    case ViolationKind::EmptyChain: return "empty-chain";
    case ViolationKind::SharedQubit: return "shared-qubit";
    case ViolationKind::DisconnectedChain: return "disconnected-chain";
    case ViolationKind::MissingCoupling: return "missing-coupling";
    case ViolationKind::ChainCountMismatch: return "chain-count-mismatch";
    }
    return "unknown";
}

namespace {

bool chain_connected(const ChimeraGraph &graph, const Chain &chain) {
    if (chain.empty())
        return false;
    std::vector<bool> reached(chain.size(), false);
    std::vector<std::size_t> frontier{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!frontier.empty()) {
        const std::size_t at = frontier.back();
        frontier.pop_back();
        for (std::size_t next = 0; next < chain.size(); ++next) {
            if (!reached[next] && graph.has_edge(chain[at], chain[next])) {
                reached[next] = true;
                ++count;
                frontier.push_back(next);
            }
        }
    }
    return count == chain.size();
}

bool chains_coupled(const ChimeraGraph &graph, const Chain &a, const Chain &b) {
    for (std::size_t x : a)
        for (std::size_t y : b)
            if (graph.has_edge(x, y))
                return true;
    return false;
}

}  // namespace

std::vector<Violation> validate_embedding(const Embedding &e, std::span<const VarPair> logical_edges,
                                          std::size_t logical_size) {
    std::vector<Violation> out;
    const ChimeraGraph &graph = e.graph();
    if (e.size() != logical_size)
        out.push_back({ViolationKind::ChainCountMismatch, e.size(), logical_size,
                       fmt::format("embedding has {} chains for {} logical spins", e.size(),
                                   logical_size)});

    constexpr std::size_t kUnowned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> owner(graph.num_qubits(), kUnowned);
    std::vector<bool> usable(e.size(), true);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Chain &chain = e.chain(i);
        if (chain.empty()) {
            out.push_back({ViolationKind::EmptyChain, i, 0, fmt::format("chain {} is empty", i)});
            usable[i] = false;
            continue;
        }
        for (std::size_t q : chain) {
            if (q >= graph.num_qubits()) {
                out.push_back({ViolationKind::QubitOutOfRange, i, q,
                               fmt::format("chain {} uses qubit {} outside the graph", i, q)});
                usable[i] = false;
                continue;
            }
            if (owner[q] != kUnowned) {
                out.push_back({ViolationKind::SharedQubit, i, owner[q],
                               fmt::format("qubit {} is used by chains {} and {}", q, owner[q], i)});
                continue;
            }
            owner[q] = i;
        }
    }

    for (std::size_t i = 0; i < e.size(); ++i) {
        if (usable[i] && !chain_connected(graph, e.chain(i)))
            out.push_back({ViolationKind::DisconnectedChain, i, 0,
                           fmt::format("chain {} is not connected in the hardware graph", i)});
    }

    for (const auto &[i, j] : logical_edges) {
        if (i >= e.size() || j >= e.size()) {
            out.push_back({ViolationKind::MissingCoupling, i, j,
                           fmt::format("logical edge ({}, {}) has no chain", i, j)});
            continue;
        }
        if (!usable[i] || !usable[j] || !chains_coupled(graph, e.chain(i), e.chain(j)))
            out.push_back({ViolationKind::MissingCoupling, i, j,
                           fmt::format("no hardware edge joins chains {} and {}", i, j)});
    }
    return out;
}

std::vector<Violation> validate_embedding(const Embedding &e, const IsingModel &logical) {
    std::vector<VarPair> edges;
    edges.reserve(logical.J().size());
    for (const auto &[key, value] : logical.J())
        edges.push_back(key);
    return validate_embedding(e, edges, logical.size());
}

}  // namespace chainbreak
