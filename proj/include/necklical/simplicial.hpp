#ifndef NECKLICAL_SIMPLICIAL_HPP
#define NECKLICAL_SIMPLICIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace necklical {

/// Raised for malformed presentations, out-of-range operator indices and
/// similar contract violations.
class TopologyError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Index of a nondegenerate generator inside a SimplicialPresentation.
struct GeneratorId
{
    std::int32_t index = -1;

    constexpr auto operator<=>(const GeneratorId&) const = default;
};

/**
 * A word s_{i_k} ... s_{i_1} in the degeneracy operators, stored in
 * Eilenberg-Zilber normal form: indices strictly increasing, applied
 * innermost first (so `indices().back()` is the outermost operator).
 */
class DegeneracyWord
{
  public:
    DegeneracyWord() = default;

    /// Normalizes a raw word given innermost-first, using
    /// s_i s_j = s_{j+1} s_i for i <= j.
    static DegeneracyWord from_raw(std::span<const int> innermost_first);

    /// Accepts an already canonical (strictly increasing) sequence.
    static DegeneracyWord from_canonical(std::vector<int> indices);

    /// Returns s_j composed on the outside of this word.
    [[nodiscard]] DegeneracyWord then(int j) const;

    [[nodiscard]] const std::vector<int>& indices() const { return indices_; }
    [[nodiscard]] std::size_t size() const { return indices_.size(); }
    [[nodiscard]] bool empty() const { return indices_.empty(); }
    [[nodiscard]] bool contains(int j) const;

    auto operator<=>(const DegeneracyWord&) const = default;

  private:
    std::vector<int> indices_;
};

/// A simplex written as a degeneracy word applied to a nondegenerate generator.
struct SimplexTerm
{
    DegeneracyWord degeneracies;
    GeneratorId generator;

    [[nodiscard]] bool nondegenerate() const { return degeneracies.empty(); }

    auto operator<=>(const SimplexTerm&) const = default;
};

struct Generator
{
    std::string name;
    int dim = 0;
    std::vector<SimplexTerm> faces;   // n+1 entries for dim n >= 1
};

/**
 * A finite simplicial set given by its nondegenerate simplices, their face
 * tables, a basepoint and an optional partial involution on 1-generators
 * (the formal inverses a <-> a^op of Z(X)). Immutable once built.
 */
class SimplicialPresentation
{
  public:
    class Builder;

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t size() const { return generators_.size(); }
    [[nodiscard]] const Generator& generator(GeneratorId id) const;
    [[nodiscard]] std::span<const Generator> generators() const { return generators_; }
    [[nodiscard]] std::optional<GeneratorId> find(const std::string& name) const;
    [[nodiscard]] GeneratorId require(const std::string& name) const;

    /// Generators of the given dimension, in insertion order.
    [[nodiscard]] std::vector<GeneratorId> of_dim(int dim) const;
    [[nodiscard]] int max_dim() const;

    [[nodiscard]] GeneratorId basepoint() const { return basepoint_; }
    [[nodiscard]] std::optional<GeneratorId> op(GeneratorId id) const;
    [[nodiscard]] bool has_op_pairing() const;

  private:
    std::string name_;
    std::vector<Generator> generators_;
    std::map<std::string, GeneratorId, std::less<>> by_name_;
    std::vector<std::optional<GeneratorId>> op_;
    GeneratorId basepoint_;
};

/// Incremental construction of a presentation. Face entries may refer to any
/// generator added earlier; build() checks names, dimensions and the basepoint
/// but not the simplicial identities (see validate()).
class SimplicialPresentation::Builder
{
  public:
    explicit Builder(std::string name = {});

    GeneratorId add_vertex(const std::string& name);
    GeneratorId add_generator(const std::string& name, int dim, std::vector<SimplexTerm> faces);
    void set_basepoint(GeneratorId v);
    void pair_op(GeneratorId a, GeneratorId a_op);

    [[nodiscard]] std::optional<GeneratorId> find(const std::string& name) const;
    [[nodiscard]] int dim_of(GeneratorId id) const;

    [[nodiscard]] SimplicialPresentation build() &&;

  private:
    SimplicialPresentation result_;
    bool has_basepoint_ = false;
};

using PresentationPtr = std::shared_ptr<const SimplicialPresentation>;

// -- simplex calculus ------------------------------------------------------

[[nodiscard]] SimplexTerm term(GeneratorId g);
[[nodiscard]] int dim(const SimplicialPresentation& X, const SimplexTerm& t);

/// i-th face in canonical form; requires dim(t) >= 1 and 0 <= i <= dim(t).
[[nodiscard]] SimplexTerm face(const SimplicialPresentation& X, const SimplexTerm& t, int i);

/// s_j(t); requires 0 <= j <= dim(t).
[[nodiscard]] SimplexTerm degeneracy(const SimplicialPresentation& X, const SimplexTerm& t, int j);

/// Removes the outermost degeneracy operator; requires t degenerate.
[[nodiscard]] SimplexTerm strip_outer(const SimplexTerm& t);

/// Sub-simplex on vertices 0..k (front) or k..dim (back).
[[nodiscard]] SimplexTerm front_face(const SimplicialPresentation& X, const SimplexTerm& t, int k);
[[nodiscard]] SimplexTerm back_face(const SimplicialPresentation& X, const SimplexTerm& t, int k);

/// k-th vertex of t as a 0-generator.
[[nodiscard]] GeneratorId vertex(const SimplicialPresentation& X, const SimplexTerm& t, int k);

struct Endpoints
{
    GeneratorId min;
    GeneratorId max;

    auto operator<=>(const Endpoints&) const = default;
};

[[nodiscard]] Endpoints endpoints(const SimplicialPresentation& X, const SimplexTerm& t);

/// t lies in the image of s_{dim t - 1}.
[[nodiscard]] bool is_top_degenerate(const SimplicialPresentation& X, const SimplexTerm& t);

/// t lies in the image of s_0.
[[nodiscard]] bool is_bottom_degenerate(const SimplexTerm& t);

/// A positive-dimensional degeneracy of a vertex.
[[nodiscard]] bool is_vertex_degenerate(const SimplicialPresentation& X, const SimplexTerm& t);

/// s_0(v) for a vertex v: the unit letter of the loop monoid.
[[nodiscard]] bool is_unit_edge(const SimplicialPresentation& X, const SimplexTerm& t);

/// Fully degenerate n-simplex s_{n-1}...s_0(v).
[[nodiscard]] SimplexTerm vertex_degeneracy(GeneratorId v, int n);

/// Textual form, outermost degeneracy first: "s2.s0.gen".
[[nodiscard]] std::string to_string(const SimplicialPresentation& X, const SimplexTerm& t);

// -- construction of Z(X) and fixtures -------------------------------------

/// X with a formal inverse a^op added for every nondegenerate 1-generator a,
/// faces swapped. Throws if X already carries an op-pairing.
[[nodiscard]] SimplicialPresentation z_extension(const SimplicialPresentation& X);

[[nodiscard]] SimplicialPresentation standard_simplex(int n);
[[nodiscard]] SimplicialPresentation boundary_simplex(int n);
[[nodiscard]] SimplicialPresentation sphere_quotient(int n);
[[nodiscard]] SimplicialPresentation wedge_of_circles(int r);

/// Downward closure of the given facets over an ordered integer vertex set.
/// The smallest vertex is the basepoint.
[[nodiscard]] SimplicialPresentation from_facets(const std::vector<std::vector<int>>& facets,
                                                 std::string name = "facets");

// -- validation --------------------------------------------------------------

struct Violation
{
    enum class Kind
    {
        SimplicialIdentity,
        OpPairing,
        Basepoint,
    };

    Kind kind;
    std::string generator;
    int i = -1;
    int j = -1;
    std::string message;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks d_i d_j = d_{j-1} d_i (i < j) on every generator, the op boundary
/// swap and the basepoint. Never throws on a built presentation.
[[nodiscard]] ValidationReport validate(const SimplicialPresentation& X);

}   // namespace necklical

template <>
struct std::hash<necklical::SimplexTerm>
{
    std::size_t operator()(const necklical::SimplexTerm& t) const noexcept;
};

#endif
