#include "flipsym/atlas.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flipsym {

SchemeKey scheme_key(const Scheme& s) {
    SchemeKey key;
    key.words.push_back(uint64_t(s.n));
    key.words.push_back(uint64_t(s.group));
    std::vector<std::array<uint64_t, 3>> fixed;
    for (const auto& t : s.fixed)
        fixed.push_back({t.a.bits, t.b.bits, t.c.bits});
    std::sort(fixed.begin(), fixed.end());
    std::vector<std::array<uint64_t, 3>> reps;
    for (const auto& t : s.orbits) {
        const RankOneTensor c = canon(t, s.group).first;
        reps.push_back({c.a.bits, c.b.bits, c.c.bits});
    }
    std::sort(reps.begin(), reps.end());
    key.words.push_back(fixed.size());
    for (const auto& t : fixed)
        key.words.insert(key.words.end(), t.begin(), t.end());
    key.words.push_back(reps.size());
    for (const auto& t : reps)
        key.words.insert(key.words.end(), t.begin(), t.end());
    return key;
}

uint64_t scheme_key_hash(const SchemeKey& k) {
    uint64_t h = 0x243f6a8885a308d3ull;
    for (uint64_t w : k.words)
        h = mix64(h ^ w);
    return h;
}

std::size_t FlipGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& v : vertices)
        total += v.neighbors.size();
    return total / 2;
}

namespace {

// Depth-first chase of rank-lowering flips only; fills `path` with a chain
// reaching the target rank, if one exists.
bool chase_reductions(const WalkState& state, int target_rank,
                      std::set<SchemeKey>& visited,
                      std::vector<std::pair<Occurrence, Occurrence>>& path) {
    if (state.rank() <= target_rank)
        return true;
    if (!visited.insert(scheme_key(state.to_scheme())).second)
        return false;
    for (const auto& [oc1, oc2] : state.enumerate_flips()) {
        WalkState probe = state;
        const MutationReport report = probe.flip(oc1, oc2);
        if (!report.applied || report.rank_delta >= 0)
            continue;
        path.push_back({oc1, oc2});
        if (chase_reductions(probe, target_rank, visited, path))
            return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

FlipGraph enumerate_component(const Scheme& seed, const AtlasOptions& options) {
    FlipGraph graph;
    graph.target_rank = options.target_rank >= 0
                            ? options.target_rank
                            : seed.rank() - group_order(seed.group);

    std::deque<uint32_t> queue;
    auto add_vertex = [&](const Scheme& s) -> int64_t {
        const SchemeKey key = scheme_key(s);
        auto it = graph.index.find(key);
        if (it != graph.index.end())
            return it->second;
        if (graph.vertices.size() >= options.max_vertices) {
            graph.truncated = true;
            return -1;
        }
        const uint32_t id = uint32_t(graph.vertices.size());
        graph.index.emplace(key, id);
        graph.vertices.push_back(AtlasVertex{s});
        queue.push_back(id);
        return id;
    };

    const int64_t seed_id = add_vertex(seed);
    if (seed_id >= 0)
        graph.vertices[std::size_t(seed_id)].is_seed = true;

    while (!queue.empty()) {
        const uint32_t v = queue.front();
        queue.pop_front();
        const WalkState state(graph.vertices[v].scheme);
        std::set<uint32_t> neighbor_set;
        for (const auto& [oc1, oc2] : state.enumerate_flips()) {
            WalkState probe = state;
            const MutationReport report = probe.flip(oc1, oc2);
            if (!report.applied)
                continue;
            if (report.rank_delta == 0) {
                const int64_t u = add_vertex(probe.to_scheme());
                if (u >= 0 && uint64_t(u) != v)
                    neighbor_set.insert(uint32_t(u));
            } else {
                graph.vertices[v].admits_reduction = true;
                if (!graph.vertices[v].reaches_target) {
                    std::vector<std::pair<Occurrence, Occurrence>> path{{oc1, oc2}};
                    std::set<SchemeKey> visited;
                    if (probe.rank() <= graph.target_rank ||
                        chase_reductions(probe, graph.target_rank, visited, path)) {
                        graph.vertices[v].reaches_target = true;
                        graph.vertices[v].reduction_path = std::move(path);
                    }
                }
            }
        }
        for (uint32_t u : neighbor_set) {
            auto& mine = graph.vertices[v].neighbors;
            if (std::find(mine.begin(), mine.end(), u) == mine.end())
                mine.push_back(u);
            auto& back = graph.vertices[u].neighbors;
            if (std::find(back.begin(), back.end(), v) == back.end())
                back.push_back(v);
        }
    }
    for (auto& vertex : graph.vertices)
        std::sort(vertex.neighbors.begin(), vertex.neighbors.end());
    return graph;
}

Scheme reflect(const Scheme& s) {
    auto tau = [](const RankOneTensor& t) {
        return RankOneTensor(transpose(t.b), transpose(t.a), transpose(t.c));
    };
    Scheme out;
    out.n = s.n;
    out.group = s.group;
    out.partition = s.partition;
    for (const auto& t : s.fixed)
        out.fixed.push_back(tau(t));
    for (const auto& t : s.orbits)
        out.orbits.push_back(tau(t));
    return out;
}

bool reflection_check(const FlipGraph& g) {
    if (g.truncated)
        throw std::invalid_argument("reflection_check requires a complete component");
    std::vector<uint32_t> image(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const SchemeKey key = scheme_key(reflect(g.vertices[v].scheme));
        auto it = g.index.find(key);
        if (it == g.index.end())
            return false;
        image[v] = it->second;
    }
    std::set<std::pair<uint32_t, uint32_t>> edges;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (uint32_t u : g.vertices[v].neighbors)
            edges.emplace(std::min<uint32_t>(v, u), std::max<uint32_t>(v, u));
    for (const auto& [a, b] : edges) {
        const uint32_t ia = image[a];
        const uint32_t ib = image[b];
        if (!edges.count({std::min(ia, ib), std::max(ia, ib)}))
            return false;
    }
    return true;
}

std::string to_dot(const FlipGraph& g) {
    std::ostringstream out;
    out << "// vertices=" << g.vertices.size() << " edges=" << g.edge_count()
        << (g.truncated ? " truncated=1" : "") << "\n";
    out << "digraph flip_component {\n";
    out << "  edge [dir=none];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const AtlasVertex& vx = g.vertices[v];
        out << "  v" << v << " [label=\"rank " << vx.scheme.rank() << "\"";
        if (vx.is_seed)
            out << " color=green style=filled";
        else if (vx.reaches_target)
            out << " color=red style=filled";
        out << "];\n";
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (uint32_t u : g.vertices[v].neighbors)
            if (v < u)
                out << "  v" << v << " -> v" << u << ";\n";
    out << "}\n";
    return out.str();
}

void write_report(const FlipGraph& g, std::ostream& out) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const AtlasVertex& vx = g.vertices[v];
        char key_hex[17];
        std::snprintf(key_hex, sizeof key_hex, "%016llx",
                      static_cast<unsigned long long>(scheme_key_hash(scheme_key(vx.scheme))));
        out << "{\"key\":\"" << key_hex << "\",\"rank\":" << vx.scheme.rank()
            << ",\"seed\":" << (vx.is_seed ? "true" : "false")
            << ",\"admits_reduction\":" << (vx.admits_reduction ? "true" : "false")
            << ",\"reaches_target\":" << (vx.reaches_target ? "true" : "false")
            << ",\"neighbors\":" << vx.neighbors.size() << "}\n";
    }
}

}  // namespace flipsym
