#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrep/limits.hpp"
#include "wrep/planar.hpp"
#include "wrep/polyomino.hpp"

namespace wrep {

enum class InputKind { graph, embedding, polyomino, triangulation };

const char* to_string(InputKind k);

/// Any parsed input file. `graph` is always set except for a bare polyomino;
/// `embedding` is set for embeddings and triangulations.
struct Instance {
    InputKind kind = InputKind::graph;
    std::optional<Graph> graph;
    std::optional<Embedding> embedding;
    std::optional<Polyomino> polyomino;
    std::optional<PolyominoTriangulation> triangulation;
    /// Lattice position of each vertex of a triangulation.
    std::vector<LatticePoint> points;
};

/// A first data line of two integers starts a graph (an embedding when rot,
/// outer or coord lines follow); anything else is a polyomino grid (a
/// triangulation when diag lines follow).
Instance load_instance(std::string_view text, const Limits& limits = {});

enum class OutputFormat { human, json };

struct Config {
    Limits limits{};
    std::uint64_t seed = 1;
    bool oracle_fallback = false;
    OutputFormat format = OutputFormat::human;
    /// Largest polyomino in the triangulation census.
    int census_cells = 4;
    /// Random instances drawn by the sampling campaigns.
    int samples = 60;
};

/// Throws invalid_parameter unless every cap and count is positive.
void validate(const Config& c);

struct Counterexample {
    InputKind kind = InputKind::triangulation;
    /// Self-contained input text, loadable with load_instance.
    std::string instance;
    std::string left_name;
    std::string left;
    std::string right_name;
    std::string right;

    friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct Report {
    std::string campaign;
    std::string statement;
    std::size_t instances = 0;
    /// Instances outside the hypotheses (for example containing K4).
    std::size_t skipped = 0;
    /// Instances left undecided by a cap.
    std::size_t unknown = 0;
    bool partial = false;
    std::vector<std::string> notes;
    std::vector<Counterexample> counterexamples;
    double seconds = 0;
    Config config;

    bool passed() const noexcept { return counterexamples.empty(); }
};

/// T2, T3, T4, T5, T6, T7, C1, L1.
const std::vector<std::string>& campaign_ids();

/// Throws invalid_parameter for an unknown id.
Report run_campaign(std::string_view id, const Config& config);

/// 0 pass, 1 counterexamples, 3 partial.
int exit_code(const Report& r);

std::string report_json(const Report& r);
std::string report_human(const Report& r);

}  // namespace wrep
