#ifndef NECKLICAL_COMPLEX_IO_HPP
#define NECKLICAL_COMPLEX_IO_HPP

#include <string>
#include <string_view>

#include "necklical/simplicial.hpp"

namespace necklical {

/// Malformed input; line and column are 1-based, 0 when unknown.
class ParseError : public TopologyError
{
  public:
    ParseError(const std::string& source, int line, int column, const std::string& what);

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/**
 * JSON complex document:
 *
 *   { "name": "...", "vertices": ["x0", ...], "basepoint": "x0",
 *     "generators": [ { "name": "a", "dim": 1,
 *                       "faces": [ {"degeneracies": [0], "generator": "x0"}, "s0.x0", ... ] } ] }
 *
 * A face is either an object (degeneracy indices innermost first, any order)
 * or a term literal "s2.s0.gen" (outermost first). Generators may be listed
 * in any order as long as faces only refer to lower dimensions.
 */
[[nodiscard]] SimplicialPresentation parse_complex_json(std::string_view text, const std::string& source = "<input>");
[[nodiscard]] std::string to_json(const SimplicialPresentation& X);

/// One facet per line as whitespace-separated vertex integers; '#' starts a comment.
[[nodiscard]] SimplicialPresentation parse_facets(std::string_view text, const std::string& source = "<input>");

/// `.json` files are complex documents, anything else a facet list.
[[nodiscard]] SimplicialPresentation load_complex_file(const std::string& path);

/// `sphere:n`, `wedge:r`, `boundary-simplex:n`, `simplex:n`, `facets:<file>`, `file:<path>`.
[[nodiscard]] SimplicialPresentation builtin_complex(std::string_view spec);

}   // namespace necklical

#endif
