#include "necklical/chains.hpp"

namespace necklical {

std::string_view to_string(Variant v)
{
    return v == Variant::DE ? "de" : "norm";
}

Variant parse_variant(std::string_view text)
{
    if (text == "de" || text == "DE")
        return Variant::DE;
    if (text == "norm" || text == "normalized" || text == "NORMALIZED")
        return Variant::Normalized;
    throw TopologyError("unknown variant '" + std::string(text) + "' (expected de or norm)");
}

bool killed(const LoopSpace& L, const LoopWord& w, Variant v)
{
    const auto& Z = L.z();
    for (const auto& t : w.letters)
    {
        if (t.nondegenerate())
            continue;
        if (v == Variant::Normalized)
            return true;
        if (is_vertex_degenerate(Z, t) || is_bottom_degenerate(t) || is_top_degenerate(Z, t))
            return true;
    }
    return false;
}

std::optional<LoopWord> chain_generator(const LoopSpace& L, LoopWord raw, Variant v)
{
    LoopWord w = reduce(L, std::move(raw));
    if (killed(L, w, v))
        return std::nullopt;
    return w;
}

LetterPolicy basis_policy(Variant v)
{
    return v == Variant::DE ? LetterPolicy::InnerDegeneracies : LetterPolicy::Nondegenerate;
}

}   // namespace necklical
