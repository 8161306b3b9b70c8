#ifndef DESSIN_ERROR_HPP
#define DESSIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dessin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotTransitiveError : Error {
    NotTransitiveError() : Error("permutation pair does not act transitively") {}
    explicit NotTransitiveError(const std::string& what) : Error(what) {}
};

// Parser diagnostics carry 1-based line/column of the offending token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

struct DimensionBoundError : Error {
    explicit DimensionBoundError(int dim, int bound)
        : Error("dimension bound exceeded: algebra dimension " + std::to_string(dim) +
                " > bound " + std::to_string(bound)) {}
};

} // namespace dessin

#endif
