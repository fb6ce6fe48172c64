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

#include "chainbreak/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "chainbreak/error.hpp"

namespace chainbreak::io {

namespace fs = std::filesystem;

json read_json(const fs::path &path) {
    std::ifstream in(path);
    if (!in)
        throw DataError(fmt::format("cannot open {}", path.string()));
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw DataError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError(fmt::format("cannot write {}", path.string()));
    out << text;
}

void write_json(const fs::path &path, const json &j) {
    write_text(path, j.dump(2) + "\n");
}

json problem_to_json(const IsingModel &model, const GroundStateReport *ground) {
    json j;
    j["n"] = model.size();
    j["h"] = model.h();
    json couplings = json::array();
    for (const auto &[key, value] : model.J())
        couplings.push_back({key.first, key.second, value});
    j["j"] = couplings;
    j["beta"] = model.beta();
    if (ground) {
        json states = json::array();
        for (const auto &s : ground->states) {
            json row = json::array();
            for (Spin v : s)
                row.push_back(int(v));
            states.push_back(row);
        }
        j["ground"] = {{"energy", ground->energy}, {"states", states}};
    }
    return j;
}

ProblemFile problem_from_json(const json &j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        auto h = j.at("h").get<std::vector<double>>();
        if (h.size() != n)
            throw DataError(fmt::format("problem declares n={} but has {} biases", n, h.size()));
        PairWeights J;
        for (const auto &entry : j.at("j")) {
            if (!entry.is_array() || entry.size() != 3)
                throw DataError("coupling entries must be [i, j, value]");
            add_pair(J, entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                     entry[2].get<double>());
        }
        ProblemFile out{IsingModel(std::move(h), std::move(J), j.value("beta", 0.0)), std::nullopt};
        if (j.contains("ground")) {
            GroundStateReport ground;
            ground.energy = j["ground"].at("energy").get<double>();
            for (const auto &row : j["ground"].at("states")) {
                SpinVector s;
                for (const auto &v : row)
                    s.push_back(static_cast<Spin>(v.get<int>()));
                if (s.size() != n)
                    throw DataError("ground state length does not match n");
                ground.states.push_back(std::move(s));
            }
            if (ground.states.empty())
                throw DataError("ground report lists no states");
            out.ground = std::move(ground);
        }
        return out;
    } catch (const json::exception &e) {
        throw DataError(fmt::format("malformed problem: {}", e.what()));
    }
}

json embedding_to_json(const Embedding &embedding) {
    const auto &g = embedding.graph();
    return {{"n", embedding.size()},
            {"graph", {{"m", g.rows()}, {"n", g.cols()}, {"l", g.shore_size()}}},
            {"chains", embedding.chains()}};
}

Embedding embedding_from_json(const json &j) {
    if (!j.contains("chains") && j.contains("embedding"))
        return embedding_from_json(j.at("embedding"));
    try {
        const auto &g = j.at("graph");
        ChimeraGraph graph(g.at("m").get<std::size_t>(), g.at("n").get<std::size_t>(),
                           g.value("l", std::size_t{4}));
        auto chains = j.at("chains").get<std::vector<Chain>>();
        if (j.contains("n") && j["n"].get<std::size_t>() != chains.size())
            throw DataError("embedding declares a different chain count than it lists");
        return Embedding(graph, std::move(chains));
    } catch (const json::exception &e) {
        throw DataError(fmt::format("malformed embedding: {}", e.what()));
    }
}

json embedded_to_json(const EmbeddedModel &model) {
    const auto &qubits = model.qubits();
    json h = json::array();
    for (std::size_t i = 0; i < qubits.size(); ++i)
        h.push_back({qubits[i], model.h()[i]});
    json inter = json::array();
    json intra = json::array();
    for (const auto &c : model.couplers())
        (c.intra ? intra : inter).push_back({qubits[c.a], qubits[c.b], c.value});
    return {{"format_version", kFormatVersion},
            {"k", model.chain_strength()},
            {"beta", model.logical().beta()},
            {"qubits", qubits},
            {"h", h},
            {"inter", inter},
            {"intra", intra},
            {"intra_edge_count", model.intra_edge_count()},
            {"embedding", embedding_to_json(model.embedding())},
            {"logical", problem_to_json(model.logical())}};
}

EmbeddedModel embedded_from_json(const json &j) {
    try {
        auto qubits = j.at("qubits").get<std::vector<std::size_t>>();
        auto local = [&](std::size_t q) {
            auto it = std::lower_bound(qubits.begin(), qubits.end(), q);
            if (it == qubits.end() || *it != q)
                throw DataError(fmt::format("qubit {} is not listed as active", q));
            return static_cast<std::size_t>(it - qubits.begin());
        };
        std::vector<double> h(qubits.size(), 0.0);
        for (const auto &entry : j.at("h"))
            h[local(entry.at(0).get<std::size_t>())] = entry.at(1).get<double>();
        std::vector<PhysicalCoupler> couplers;
        for (const char *key : {"inter", "intra"}) {
            const bool intra = std::string(key) == "intra";
            for (const auto &entry : j.at(key)) {
                const std::size_t a = local(entry.at(0).get<std::size_t>());
                const std::size_t b = local(entry.at(1).get<std::size_t>());
                couplers.push_back({std::min(a, b), std::max(a, b), entry.at(2).get<double>(), intra});
            }
        }
        std::sort(couplers.begin(), couplers.end(), [](const auto &x, const auto &y) {
            return std::pair{x.a, x.b} < std::pair{y.a, y.b};
        });
        return EmbeddedModel(problem_from_json(j.at("logical")).model, embedding_from_json(j),
                             j.at("k").get<double>(), std::move(qubits), std::move(h),
                             std::move(couplers));
    } catch (const json::exception &e) {
        throw DataError(fmt::format("malformed embedded model: {}", e.what()));
    }
}

json schedule_to_json(const AnnealSchedule &schedule) {
    return {{"sweeps", schedule.sweeps},
            {"beta_start", schedule.beta_start},
            {"beta_end", schedule.beta_end},
            {"restarts", schedule.restarts}};
}

AnnealSchedule schedule_from_json(const json &j) {
    AnnealSchedule s;
    s.sweeps = j.value("sweeps", s.sweeps);
    s.beta_start = j.value("beta_start", s.beta_start);
    s.beta_end = j.value("beta_end", s.beta_end);
    s.restarts = j.value("restarts", s.restarts);
    return s;
}

json suite_config_to_json(const SuiteConfig &cfg) {
    return {{"m", cfg.assets},
            {"w", cfg.granularity},
            {"b", cfg.budget},
            {"n_f", cfg.price_points},
            {"theta", {cfg.theta.returns, cfg.theta.budget, cfg.theta.risk}},
            {"seed", cfg.seed},
            {"volatility", cfg.volatility},
            {"initial_price", {cfg.initial_price_min, cfg.initial_price_max}}};
}

json sweep_config_to_json(const SweepConfig &cfg) {
    json strategies = json::array();
    for (Strategy s : cfg.strategies)
        strategies.push_back(to_string(s));
    return {{"k", cfg.k_values},
            {"strategies", strategies},
            {"problems", cfg.problems},
            {"samples", cfg.samples},
            {"schedule", schedule_to_json(cfg.schedule)},
            {"readout_flip_p", cfg.noise.readout_flip_p},
            {"seed", cfg.seed},
            {"chimera", {cfg.chimera_rows, cfg.chimera_cols, cfg.chimera_shore}},
            {"brute_force_cap", cfg.brute_force_cap}};
}

fs::path sidecar_path(const fs::path &csv) {
    fs::path out = csv;
    out.replace_extension(".json");
    return out;
}

void write_samples(const fs::path &csv, const PhysicalSampleSet &samples) {
    std::string text = "sample";
    for (std::size_t q : samples.qubits)
        text += fmt::format(",q{}", q);
    text += ",energy\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        text += std::to_string(i);
        for (Spin v : samples.samples[i])
            text += v > 0 ? ",1" : ",-1";
        text += fmt::format(",{}\n", samples.energies[i]);
    }
    write_text(csv, text);
    write_json(sidecar_path(csv), {{"format_version", kFormatVersion},
                                   {"n_samples", samples.size()},
                                   {"seed", samples.seed},
                                   {"schedule", schedule_to_json(samples.schedule)},
                                   {"readout_flip_p", samples.noise.readout_flip_p},
                                   {"qubits", samples.qubits}});
}

namespace {

std::vector<std::string> split(const std::string &line, char sep = ',') {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep))
        out.push_back(field);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

}  // namespace

PhysicalSampleSet read_samples(const fs::path &csv) {
    std::ifstream in(csv);
    if (!in)
        throw DataError(fmt::format("cannot open {}", csv.string()));
    PhysicalSampleSet out;
    std::string line;
    if (!std::getline(in, line))
        throw DataError(fmt::format("{} is empty", csv.string()));
    const auto header = split(line);
    if (header.size() < 2 || header.front() != "sample" || header.back() != "energy")
        throw DataError(fmt::format("{}: unexpected header", csv.string()));
    for (std::size_t c = 1; c + 1 < header.size(); ++c) {
        if (header[c].size() < 2 || header[c][0] != 'q')
            throw DataError(fmt::format("{}: bad qubit column '{}'", csv.string(), header[c]));
        out.qubits.push_back(std::stoull(header[c].substr(1)));
    }
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = split(line);
        if (fields.size() != header.size())
            throw DataError(fmt::format("{}: row {} has {} fields, expected {}", csv.string(),
                                        out.size(), fields.size(), header.size()));
        SpinVector s;
        s.reserve(out.qubits.size());
        for (std::size_t c = 1; c + 1 < fields.size(); ++c) {
            const int v = std::stoi(fields[c]);
            if (v != 1 && v != -1)
                throw DataError(fmt::format("{}: spin value {} is not +-1", csv.string(), v));
            s.push_back(static_cast<Spin>(v));
        }
        out.samples.push_back(std::move(s));
        out.energies.push_back(std::stod(fields.back()));
    }
    const fs::path sidecar = sidecar_path(csv);
    if (fs::exists(sidecar)) {
        const json j = read_json(sidecar);
        out.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("schedule"))
            out.schedule = schedule_from_json(j["schedule"]);
        out.noise.readout_flip_p = j.value("readout_flip_p", 0.0);
    }
    return out;
}

std::string profile_csv(const FaultProfile &profile) {
    std::string text = "chain,position,p_hat,n_b\n";
    for (std::size_t i = 0; i < profile.size(); ++i)
        for (std::size_t l = 0; l < profile.chain(i).size(); ++l)
            text += fmt::format("{},{},{},{}\n", i, l, profile.chain(i)[l], profile.broken_samples());
    return text;
}

void write_profile(const fs::path &csv, const FaultProfile &profile) {
    write_text(csv, profile_csv(profile));
}

FaultProfile read_profile(const fs::path &csv) {
    std::ifstream in(csv);
    if (!in)
        throw DataError(fmt::format("cannot open {}", csv.string()));
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> p;
    std::size_t broken = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = split(line);
        if (fields.size() != 4)
            throw DataError(fmt::format("{}: expected 4 fields per row", csv.string()));
        const std::size_t chain = std::stoull(fields[0]);
        const std::size_t position = std::stoull(fields[1]);
        if (chain >= p.size())
            p.resize(chain + 1);
        if (position != p[chain].size())
            throw DataError(fmt::format("{}: positions of chain {} out of order", csv.string(), chain));
        p[chain].push_back(std::stod(fields[2]));
        broken = std::stoull(fields[3]);
    }
    return FaultProfile(std::move(p), broken);
}

void write_decoded(const fs::path &csv, const DecodedSampleSet &decoded) {
    std::string text = "sample";
    for (std::size_t i = 0; i < decoded.chain_count; ++i)
        text += fmt::format(",s{}", i);
    text += ",discarded,broken_chains\n";
    for (std::size_t r = 0; r < decoded.samples.size(); ++r) {
        const auto &s = decoded.samples[r];
        text += std::to_string(r);
        for (std::size_t i = 0; i < decoded.chain_count; ++i)
            text += s.state ? ((*s.state)[i] > 0 ? ",1" : ",-1") : ",";
        text += fmt::format(",{},{}\n", s.discarded() ? 1 : 0, s.broken_chains);
    }
    write_text(csv, text);
}

std::vector<SuiteProblem> load_suite(const fs::path &dir) {
    if (!fs::is_directory(dir))
        throw DataError(fmt::format("suite directory {} does not exist", dir.string()));
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("problem_") && name.ends_with(".json"))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<SuiteProblem> suite;
    suite.reserve(files.size());
    for (const auto &path : files) {
        auto file = problem_from_json(read_json(path));
        suite.push_back({path.stem().string(), std::move(file.model), std::move(file.ground)});
    }
    return suite;
}

}  // namespace chainbreak::io
