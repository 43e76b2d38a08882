#ifndef FINFISH_JSON_IO_HPP
#define FINFISH_JSON_IO_HPP

#include <string>

#include "finfish/fish_surface.hpp"

namespace finfish {

// {"cells": N, "gluings": [[c1, "UR", c2, "LL"], ...], "head": h} with the
// complex's own numbering and gluings in their deterministic order.
std::string fish_to_json(const FishComplex& f);

// Inverse of fish_to_json; validates the complex and the declared head.
FishComplex fish_from_json(const std::string& text);

}  // namespace finfish

#endif  // FINFISH_JSON_IO_HPP
