#pragma once

namespace wrep {

/// Size caps for the exponential procedures. Exceeding a cap raises
/// resource_limit (or yields an "unknown" decision); nothing is truncated.
struct Limits {
    int colour_vertices = 24;     // k_colour, chromatic_number, colouring enumeration
    int perfect_vertices = 12;    // is_perfect
    int word_vertices = 8;        // find_representing_word
    int orientation_edges = 24;   // semi-transitive orientation search
    int tile_points = 16;         // boundary lattice points of one tile
    int census_cells = 6;         // enumerate_polyominoes
};

}  // namespace wrep
