#ifndef DESSIN_REPORT_HPP
#define DESSIN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "dessin/algebra.hpp"
#include "dessin/dessin.hpp"

namespace dessin {

// Full structural report: triple, passport, quiver, relations, dimensions,
// centre (formula and brute force), fingerprint, duality checks. Field order
// is fixed, so serialisation is byte-identical across runs.
nlohmann::ordered_json report_json(const Dessin& d, int centre_bound = kDefaultCentreBound);

std::string report_text(const Dessin& d, int centre_bound = kDefaultCentreBound);

} // namespace dessin

#endif
