#ifndef FINFISH_RENDER_HPP
#define FINFISH_RENDER_HPP

#include <string>

#include "finfish/fish_surface.hpp"

namespace finfish {

// Standalone SVG document: one diamond per occupied plane position, fin edges
// emphasized, positions covered by several cells carrying a multiplicity badge.
std::string render_svg(const FishComplex& f);

// Text rendering of the same picture; fin edges drawn with '#', multiplicities
// written inside the diamond.
std::string render_ascii(const FishComplex& f);

}  // namespace finfish

#endif  // FINFISH_RENDER_HPP
