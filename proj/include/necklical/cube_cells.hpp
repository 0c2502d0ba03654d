#ifndef NECKLICAL_CUBE_CELLS_HPP
#define NECKLICAL_CUBE_CELLS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace necklical {

/**
 * A cell of I^{n-1} (plain) or I^n_aug (augmented), written as a sequence of
 * vertex blocks of Delta^n. Consecutive blocks share their junction value and
 * the last block ends at n; a plain cell starts at 0. Blocks are weakly
 * increasing: a repeated value is a degeneracy, so the labels form a
 * simplicial-style calculus without relabeling.
 *
 * Coordinates run left to right over the interior values of each block; in an
 * augmented cell every value of the first block except its last is also a
 * coordinate.
 */
struct CubeCellLabel
{
    bool augmented = false;
    std::vector<std::vector<int>> blocks;
    int ambient = 0;

    auto operator<=>(const CubeCellLabel&) const = default;
};

[[nodiscard]] CubeCellLabel top_cell(int n, bool augmented);

[[nodiscard]] int cube_dim(const CubeCellLabel& c);
[[nodiscard]] int block_count(const CubeCellLabel& c);

/// Block-junction and endpoint invariants.
[[nodiscard]] bool is_valid(const CubeCellLabel& c);

/// Some block repeats a value.
[[nodiscard]] bool is_degenerate(const CubeCellLabel& c);

/// d^eps_i without normalization; 1 <= i <= cube_dim(c).
[[nodiscard]] CubeCellLabel cube_face_raw(const CubeCellLabel& c, int i, int eps);
[[nodiscard]] CubeCellLabel cube_face(const CubeCellLabel& c, int i, int eps);

/// eta_j repeats the (j-1)-th value along the necklace, junction values
/// counting once and belonging to the earlier block. Plain cells accept
/// 1 <= j <= dim + blocks + 1, augmented cells 1 <= j <= dim + blocks.
[[nodiscard]] CubeCellLabel cube_degeneracy(const CubeCellLabel& c, int j);

/**
 * Representative modulo the necklace identifications: blocks [v,v] after the
 * first (or anywhere, for plain cells) are dropped, and a block ending in a
 * repeated value hands the repetition to the start of the next block.
 */
[[nodiscard]] CubeCellLabel cube_normalize(CubeCellLabel c);

/// The first block as a face of Delta^n; augmented cells only.
[[nodiscard]] std::vector<int> psi(const CubeCellLabel& c);

/// All nondegenerate cells, sorted by (dimension, blocks).
[[nodiscard]] std::vector<CubeCellLabel> enumerate_cube_cells(int n, bool augmented);

/// `[0,1][1,2]` for plain cells, `0,1][1,2]` for augmented ones.
[[nodiscard]] std::string format_cell(const CubeCellLabel& c);
[[nodiscard]] CubeCellLabel parse_cell(std::string_view text);

}   // namespace necklical

#endif
