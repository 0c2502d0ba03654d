#include "necklical/cube_cells.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "necklical/simplicial.hpp"

namespace necklical {

namespace {

struct Slot
{
    std::size_t block;
    std::size_t pos;
};

// Coordinate slots in left-to-right order.
std::vector<Slot> coordinates(const CubeCellLabel& c)
{
    std::vector<Slot> out;
    for (std::size_t b = 0; b < c.blocks.size(); ++b)
    {
        const std::size_t len = c.blocks[b].size();
        const std::size_t first = (b == 0 && c.augmented) ? 0 : 1;
        for (std::size_t q = first; q + 1 < len; ++q)
            out.push_back({b, q});
    }
    return out;
}

bool repeats(const std::vector<int>& block)
{
    return std::adjacent_find(block.begin(), block.end()) != block.end();
}

bool constant(const std::vector<int>& block)
{
    return block.size() >= 2 && block.front() == block.back();
}

}   // namespace

CubeCellLabel top_cell(int n, bool augmented)
{
    if (n < (augmented ? 0 : 1))
        throw TopologyError("top_cell: ambient dimension too small");
    CubeCellLabel c{augmented, {{}}, n};
    for (int v = 0; v <= n; ++v)
        c.blocks[0].push_back(v);
    return c;
}

int cube_dim(const CubeCellLabel& c)
{
    return static_cast<int>(coordinates(c).size());
}

int block_count(const CubeCellLabel& c)
{
    return static_cast<int>(c.blocks.size());
}

bool is_valid(const CubeCellLabel& c)
{
    if (c.blocks.empty())
        return false;
    for (std::size_t b = 0; b < c.blocks.size(); ++b)
    {
        const auto& blk = c.blocks[b];
        const std::size_t min_len = (b == 0 && c.augmented) ? 1 : 2;
        if (blk.size() < min_len)
            return false;
        if (!std::is_sorted(blk.begin(), blk.end()) || blk.front() < 0 || blk.back() > c.ambient)
            return false;
        if (b > 0 && c.blocks[b - 1].back() != blk.front())
            return false;
    }
    if (c.blocks.back().back() != c.ambient)
        return false;
    return c.augmented || c.blocks.front().front() == 0;
}

bool is_degenerate(const CubeCellLabel& c)
{
    return std::any_of(c.blocks.begin(), c.blocks.end(), repeats);
}

CubeCellLabel cube_face_raw(const CubeCellLabel& c, int i, int eps)
{
    if (eps != 0 && eps != 1)
        throw TopologyError("face direction must be 0 or 1");
    const auto slots = coordinates(c);
    if (i < 1 || i > static_cast<int>(slots.size()))
        throw TopologyError("cube face index " + std::to_string(i) + " out of range for " + format_cell(c));
    const Slot s = slots[static_cast<std::size_t>(i - 1)];
    CubeCellLabel out = c;
    auto& blk = out.blocks[s.block];
    if (eps == 1)
    {
        blk.erase(blk.begin() + static_cast<long>(s.pos));
        return out;
    }
    std::vector<int> right(blk.begin() + static_cast<long>(s.pos), blk.end());
    blk.resize(s.pos + 1);
    out.blocks.insert(out.blocks.begin() + static_cast<long>(s.block) + 1, std::move(right));
    return out;
}

CubeCellLabel cube_face(const CubeCellLabel& c, int i, int eps)
{
    return cube_normalize(cube_face_raw(c, i, eps));
}

CubeCellLabel cube_degeneracy(const CubeCellLabel& c, int j)
{
    int total = 0;
    for (std::size_t b = 0; b < c.blocks.size(); ++b)
        total += static_cast<int>(c.blocks[b].size()) - (b == 0 ? 0 : 1);
    if (j < 1 || j > total)
        throw TopologyError("cube degeneracy index " + std::to_string(j) + " out of range for " + format_cell(c));

    int g = j - 1;
    CubeCellLabel out = c;
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
    {
        auto& blk = out.blocks[b];
        const int offset = b == 0 ? 0 : 1;   // junction value belongs to the previous block
        const int here = static_cast<int>(blk.size()) - offset;
        if (g < here)
        {
            const auto pos = static_cast<std::size_t>(g + offset);
            blk.insert(blk.begin() + static_cast<long>(pos), blk[pos]);
            return out;
        }
        g -= here;
    }
    throw TopologyError("cube degeneracy: vertex bookkeeping failed");
}

CubeCellLabel cube_normalize(CubeCellLabel c)
{
    auto& blocks = c.blocks;
    for (;;)
    {
        for (std::size_t b = (c.augmented ? 1 : 0); b < blocks.size() && blocks.size() > 1;)
        {
            if (blocks[b].size() == 2 && blocks[b][0] == blocks[b][1])
                blocks.erase(blocks.begin() + static_cast<long>(b));
            else
                ++b;
        }

        bool pushed = false;
        for (std::size_t b = 0; b < blocks.size() && !pushed; ++b)
        {
            auto& blk = blocks[b];
            const bool base = c.augmented && b == 0;
            const std::size_t min_len = base ? 2 : 3;
            if (blk.size() < min_len || blk[blk.size() - 1] != blk[blk.size() - 2])
                continue;
            const bool last = b + 1 == blocks.size();
            if (last && !base && constant(blk))
                continue;
            const int v = blk.back();
            blk.pop_back();
            if (last)
                blocks.push_back({v, v});
            blocks[b + 1].insert(blocks[b + 1].begin(), v);
            pushed = true;
        }
        if (!pushed)
            break;
    }
    return c;
}

std::vector<int> psi(const CubeCellLabel& c)
{
    if (!c.augmented)
        throw TopologyError("psi is defined on augmented cells only");
    return c.blocks.front();
}

std::vector<CubeCellLabel> enumerate_cube_cells(int n, bool augmented)
{
    if (n < (augmented ? 0 : 1))
        throw TopologyError("enumerate_cube_cells: ambient dimension too small");
    std::vector<CubeCellLabel> out;
    std::vector<std::vector<int>> blocks;

    // Plain block chains from `from` to n.
    std::function<void()> chain = [&]() {
        const int from = blocks.back().back();
        if (from == n)
        {
            out.push_back(CubeCellLabel{augmented, blocks, n});
            return;
        }
        // a block starting at `from`: choose a subset of (from, n] with a largest element
        std::vector<int> blk{from};
        std::function<void(int)> grow = [&](int next) {
            for (int v = next; v <= n; ++v)
            {
                blk.push_back(v);
                blocks.push_back(blk);
                chain();
                blocks.pop_back();
                grow(v + 1);
                blk.pop_back();
            }
        };
        grow(from + 1);
    };

    if (augmented)
    {
        std::vector<int> first;
        std::function<void(int)> choose = [&](int next) {
            for (int v = next; v <= n; ++v)
            {
                first.push_back(v);
                blocks.push_back(first);
                chain();
                blocks.pop_back();
                choose(v + 1);
                first.pop_back();
            }
        };
        choose(0);
    }
    else
    {
        // the first block is [0, ...]; treat it as a chain step from a virtual [0]
        blocks.push_back({0});
        chain();
        for (auto& c : out)
            c.blocks.erase(c.blocks.begin());
        blocks.clear();
    }

    std::sort(out.begin(), out.end(), [](const CubeCellLabel& a, const CubeCellLabel& b) {
        const int da = cube_dim(a);
        const int db = cube_dim(b);
        if (da != db)
            return da < db;
        return a.blocks < b.blocks;
    });
    return out;
}

std::string format_cell(const CubeCellLabel& c)
{
    std::string out;
    for (std::size_t b = 0; b < c.blocks.size(); ++b)
    {
        if (b > 0 || !c.augmented)
            out += '[';
        for (std::size_t k = 0; k < c.blocks[b].size(); ++k)
        {
            if (k > 0)
                out += ',';
            out += std::to_string(c.blocks[b][k]);
        }
        out += ']';
    }
    return out;
}

CubeCellLabel parse_cell(std::string_view text)
{
    CubeCellLabel c;
    std::size_t k = 0;
    auto fail = [&](const std::string& why) -> void {
        throw TopologyError("cell literal '" + std::string(text) + "' at column " + std::to_string(k + 1) + ": " +
                            why);
    };
    while (k < text.size() && text[k] == ' ')
        ++k;
    c.augmented = k < text.size() && text[k] != '[';
    bool first = true;
    while (k < text.size())
    {
        if (text[k] == ' ')
        {
            ++k;
            continue;
        }
        if (!(first && c.augmented))
        {
            if (text[k] != '[')
                fail("expected '['");
            ++k;
        }
        std::vector<int> blk;
        for (;;)
        {
            std::size_t start = k;
            while (k < text.size() && text[k] >= '0' && text[k] <= '9')
                ++k;
            if (start == k)
                fail("expected a vertex");
            blk.push_back(std::stoi(std::string(text.substr(start, k - start))));
            if (k < text.size() && text[k] == ',')
            {
                ++k;
                continue;
            }
            if (k < text.size() && text[k] == ']')
            {
                ++k;
                break;
            }
            fail("expected ',' or ']'");
        }
        c.blocks.push_back(std::move(blk));
        first = false;
    }
    if (c.blocks.empty())
        fail("empty cell");
    c.ambient = c.blocks.back().back();
    if (!is_valid(c))
        throw TopologyError("cell literal '" + std::string(text) + "' violates the block invariants");
    return c;
}

}   // namespace necklical
