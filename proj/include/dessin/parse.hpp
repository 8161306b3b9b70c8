#ifndef DESSIN_PARSE_HPP
#define DESSIN_PARSE_HPP

#include <optional>
#include <string>

#include "dessin/dessin.hpp"

namespace dessin {

// One dessin per file. Line-oriented: `n = <int>` first, then `sigma = <cycles>`
// and `alpha = <cycles>` in either order, where <cycles> is zero or more
// `( i1 i2 ... ik )` groups (empty means the identity). An optional
// `name = <text>` line is kept with the document. `#` starts a comment.
struct DessinDocument {
    int n = 0;
    std::string sigma_text;
    std::string alpha_text;
    std::optional<std::string> name;
};

DessinDocument parse_document(const std::string& text);

// Parses and validates; phi is always derived, never read.
Dessin parse_dessin(const std::string& text);

std::string print_dessin(const Dessin& d,
                         const std::optional<std::string>& name = std::nullopt);

} // namespace dessin

#endif
