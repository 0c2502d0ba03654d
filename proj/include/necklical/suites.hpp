#ifndef NECKLICAL_SUITES_HPP
#define NECKLICAL_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "necklical/chains.hpp"
#include "necklical/path_space.hpp"
#include "necklical/relations.hpp"

namespace necklical {

using Rng = std::mt19937_64;

/// Seed used by every randomized suite unless one is given.
inline constexpr std::uint64_t default_seed = 20240917;

struct SampleOptions
{
    int max_letters = 4;          // random letters before the closing path
    int max_dim = 3;              // letter dimension cap
    double degenerate_rate = 0.2; // chance of applying a random degeneracy to a letter
};

/// A raw loop at the basepoint: a random composable walk closed by a shortest
/// edge path back to the basepoint.
[[nodiscard]] LoopWord random_loop(const LoopSpace& L, Rng& rng, const SampleOptions& o = {});

/// Random word from v to the basepoint.
[[nodiscard]] LoopWord random_word_from(const LoopSpace& L, GeneratorId v, Rng& rng, const SampleOptions& o = {});

/// A canonical path cell with a random base simplex of X.
[[nodiscard]] PathCell random_path_cell(const LoopSpace& L, Rng& rng, const SampleOptions& o = {});

/// A reduced degree-0 loop: a random edge walk of at most max_length letters, closed and reduced.
[[nodiscard]] LoopWord random_group_element(const LoopSpace& L, Rng& rng, int max_length);

struct SuiteResult
{
    std::string suite;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;   // first few, each with a replayable literal

    [[nodiscard]] bool ok() const { return failed == 0; }
    void fail(std::string message);
    void merge(const SuiteResult& other);
};

struct SuiteOptions
{
    std::uint64_t seed = default_seed;
    std::size_t samples = 1000;
    int degree = 4;
    int max_length = 4;
    SampleOptions sampling;
};

/// Relation systems on every cell of I^n and I^n_aug.
[[nodiscard]] SuiteResult cube_suite(int n, EarlyFaceRule rule = EarlyFaceRule::Derived);

/// Relation systems on random words and path cells.
[[nodiscard]] SuiteResult cubical_suite(const LoopSpace& L, const SuiteOptions& o,
                                        EarlyFaceRule rule = EarlyFaceRule::Derived);

/// d^2 = 0 on random generators in both variants, plus the quotient chain-map check.
[[nodiscard]] SuiteResult dsq_suite(const LoopSpace& L, const SuiteOptions& o);

/// d(uv) = d(u) v + (-1)^{|u|} u d(v) on random pairs in both variants.
[[nodiscard]] SuiteResult leibniz_suite(const LoopSpace& L, const SuiteOptions& o);

/// Loop boundary against cobar boundary, both variants.
[[nodiscard]] SuiteResult theorem2_suite(const LoopSpace& L, const SuiteOptions& o);

/// Connectivity and unique lifts on the covering graph of radius max_length.
[[nodiscard]] SuiteResult covering_suite(const LoopSpace& L, const SuiteOptions& o);

/// Group axioms on random degree-0 loops.
[[nodiscard]] SuiteResult group_suite(const LoopSpace& L, const SuiteOptions& o);

}   // namespace necklical

#endif
