#ifndef NECKLICAL_PATH_SPACE_HPP
#define NECKLICAL_PATH_SPACE_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "necklical/loop_space.hpp"

namespace necklical {

/// A cell (x, y) of the path model: x a simplex of X, y a word from max x to
/// the basepoint.
struct PathCell
{
    SimplexTerm base;
    LoopWord tail;

    auto operator<=>(const PathCell&) const = default;
};

/// Checks that base lies in X and max(base) = source(tail), tail ends at x0.
[[nodiscard]] PathCell make_path_cell(const LoopSpace& L, SimplexTerm base, LoopWord tail);

[[nodiscard]] int dim(const LoopSpace& L, const PathCell& c);

/// Moves top degeneracies of the base into the tail via
/// (s_p x, y) ~ (x, eta_1 y), then reduces the tail.
[[nodiscard]] PathCell canonical(const LoopSpace& L, PathCell raw);

/// d^eps_i, 1 <= i <= dim. Coordinates 1..dim(base) act on the base, later
/// ones on the tail.
[[nodiscard]] PathCell path_face_raw(const LoopSpace& L, const PathCell& c, int i, int eps);
[[nodiscard]] PathCell path_face(const LoopSpace& L, const PathCell& c, int i, int eps);

/// eta_j = s_{j-1} on the base for j <= dim(base) + 1, otherwise the word
/// degeneracy eta_{j - dim(base)} of the tail.
[[nodiscard]] PathCell path_degeneracy_raw(const LoopSpace& L, const PathCell& c, int j);
[[nodiscard]] PathCell path_degeneracy(const LoopSpace& L, const PathCell& c, int j);

/// Right action of loops at the basepoint: (x, y) . w = (x, y w).
[[nodiscard]] PathCell action(const LoopSpace& L, const PathCell& c, const LoopWord& w);

/// iota(w) = (x0, w).
[[nodiscard]] PathCell iota(const LoopSpace& L, const LoopWord& w);

/// pr(x, y) = x.
[[nodiscard]] SimplexTerm pr(const PathCell& c);

/// `base | tail` with the word literal syntax for the tail.
[[nodiscard]] std::string format_path_cell(const LoopSpace& L, const PathCell& c);
[[nodiscard]] PathCell parse_path_cell(const LoopSpace& L, std::string_view text);

// -- 1-skeleton --------------------------------------------------------------------

/**
 * The part of the 1-skeleton of the path model lying over the 1-skeleton of
 * X, truncated to tails of length <= max_length. Vertices are 0-cells (v, y);
 * each edge is a 1-cell (a, y) joining its d^0_1 face (at min a) to its d^1_1
 * face (at max a), kept only when both faces lie in the ball.
 */
struct CoveringGraph
{
    struct Edge
    {
        std::size_t from = 0;   // d^0_1 face
        std::size_t to = 0;     // d^1_1 face
        GeneratorId label;      // pr of the 1-cell
        PathCell cell;
    };

    std::vector<PathCell> vertices;
    std::vector<bool> boundary;   // tail length equals max_length
    std::vector<Edge> edges;
    int max_length = 0;

    [[nodiscard]] std::size_t index_of(const PathCell& v) const;
};

[[nodiscard]] CoveringGraph one_skeleton(const LoopSpace& L, int max_length);

[[nodiscard]] bool is_connected(const CoveringGraph& g);
[[nodiscard]] bool is_acyclic(const CoveringGraph& g);
[[nodiscard]] std::vector<int> degrees(const CoveringGraph& g);

/// Every non-boundary vertex has exactly one incident edge per (edge of X,
/// end of that edge) at which it sits. Returns one message per violation.
[[nodiscard]] std::vector<std::string> covering_violations(const LoopSpace& L, const CoveringGraph& g);

void write_dot(std::ostream& os, const LoopSpace& L, const CoveringGraph& g);

/**
 * Adjacency text format:
 *   vertices <N> edges <M> max-length <K>
 *   v <index> <cell literal> [boundary]
 *   e <from> <to> <edge of X>
 */
void write_adjacency(std::ostream& os, const LoopSpace& L, const CoveringGraph& g);

}   // namespace necklical

#endif
