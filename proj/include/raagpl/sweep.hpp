#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raagpl/graph.hpp"
#include "raagpl/word.hpp"

namespace raagpl {

struct SweepConfig {
    std::uint64_t seed = 42;
    int cases = 200;
    int max_vertices = 5;
    int max_length = 8;
    int threads = 0;           // 0 = all available, 1 = the serial reference path
    int oracle_max_length = 8; // brute-force cross-check cap per word
};

struct SweepCase {
    Graph graph;
    Word word;
};

// Deterministic material for (cfg.seed, index): an Erdos-Renyi p = 1/2 graph
// and a uniform random nontrivial word over it.
SweepCase make_case(const SweepConfig& cfg, int index);

struct CaseResult {
    int index = 0;
    bool pass = true;
    std::string detail; // empty when passing
};

struct SweepReport {
    SweepConfig config;
    int failures = 0;
    std::vector<CaseResult> cases;
    std::string summary() const;
};

// Full invariant bundle per case: normal-form laws with brute-force oracle
// agreement, slide laws of the left-greedy decomposition, witness construction
// and verification, certificate acceptance by the independent checker, and
// serialization round trips. Cases run under OpenMP unless threads == 1;
// results are indexed by case, so both paths produce identical reports.
SweepReport run_random_sweep(const SweepConfig& cfg);

CaseResult run_sweep_case(const SweepConfig& cfg, int index);

struct ExhaustiveConfig {
    int max_vertices = 4;
    int max_length = 8;
    int threads = 0;
};

struct ExhaustiveStats {
    unsigned long long graphs = 0;
    unsigned long long words = 0;
    unsigned long long failures = 0;
    std::string first_failure; // earliest failing graph/word in enumeration order
};

// Every labeled graph on 1..max_vertices. The 2^(n choose 2) edge subsets are
// enumerated per vertex count.
std::vector<Graph> all_graphs_up_to(int max_vertices);

// Builds and verifies a witness for every nontrivial element with normal form
// of length <= max_length, over every labeled graph on <= max_vertices.
// Elements are enumerated directly as canonical normal forms, one per element.
ExhaustiveStats exhaustive_witness_sweep(const ExhaustiveConfig& cfg);

// Checks reduce against the brute-force oracle (triviality, minimal length,
// canonical representative) and the left-greedy slide laws on every raw word
// of length <= max_length over every labeled graph on <= max_vertices.
ExhaustiveStats exhaustive_oracle_sweep(const ExhaustiveConfig& cfg);

} // namespace raagpl
