#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "flipsym/walk_state.hpp"

namespace flipsym {

// Canonical identity of a scheme as a set of orbits: dimension, group,
// sorted fixed tensors and sorted canonical orbit representatives.  Equal
// keys iff equal schemes up to representative choice and orbit order.
struct SchemeKey {
    std::vector<uint64_t> words;

    friend auto operator<=>(const SchemeKey&, const SchemeKey&) = default;
};

SchemeKey scheme_key(const Scheme& s);
uint64_t scheme_key_hash(const SchemeKey& k);

struct AtlasVertex {
    Scheme scheme;
    bool is_seed = false;
    bool admits_reduction = false;   // some flip lowers the rank
    bool reaches_target = false;     // a reduction chain attains the target rank
    std::vector<uint32_t> neighbors; // rank-preserving flip adjacency
    // A replayable reduction chain to the target (flip occurrence pairs,
    // applied in order to a fresh state built from `scheme`).
    std::vector<std::pair<Occurrence, Occurrence>> reduction_path;
};

// The flip-graph component of a seed: vertices are schemes reachable by
// rank-preserving orbit flips, edges the flip adjacency.  Rank-lowering
// flips are not edges; they are recorded as vertex flags.
struct FlipGraph {
    int target_rank = 0;
    bool truncated = false;
    std::vector<AtlasVertex> vertices;
    std::map<SchemeKey, uint32_t> index;

    std::size_t edge_count() const;
};

struct AtlasOptions {
    std::size_t max_vertices = 200000;
    int target_rank = -1;  // -1: seed rank minus |G| (one reduction away)
};

// Breadth-first closure of the seed under rank-preserving orbit flips,
// with deterministic vertex ordering.  Intended for n=2-sized seeds.
FlipGraph enumerate_component(const Scheme& seed, const AtlasOptions& options = {});

// True iff transposing every factor and swapping two tensor slots induces
// a graph automorphism on vertex keys.  Throws on a truncated graph.
bool reflection_check(const FlipGraph& g);

// The reflection image of a scheme under that map.
Scheme reflect(const Scheme& s);

// DOT rendering: the seed is green, vertices whose reduction chain reaches
// the target rank are red; the header comment carries the counts.
std::string to_dot(const FlipGraph& g);

// JSON-lines component report, one vertex per line.
void write_report(const FlipGraph& g, std::ostream& out);

}  // namespace flipsym
