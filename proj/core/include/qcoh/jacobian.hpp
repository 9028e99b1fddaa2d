#pragma once

#include "qcoh/element.hpp"

#include <string>
#include <vector>

namespace qcoh {

// Orientation convention: the volume form is phi_1^phi_{1+g}^...^phi_g^phi_{2g},
// so that the g-th power of the symplectic form integrates to g! > 0.
std::string volume_form_label(int genus);

// Pairing with the fundamental class of the Jacobian: the coefficient of the
// volume form; lower-degree terms contribute zero.
Rational integrate_jacobian(const Element& jacobian_class, int genus);

// Integration over the surface factor: extracts the coefficient of the
// surface fundamental class, landing in the Jacobian exterior algebra.
Element pushforward_sigma(const Element& surface_jacobian_class, int genus);

struct GrrTrace {
    std::vector<std::pair<std::string, Element>> steps;
    Element character;  // rank + 4w
    Element doubled;    // rank-2g lift: 2*character
};

// Chern character of the rank-g extension bundle over the Jacobian,
// evaluated through the pushforward chain; returns g + 4w exactly.
Element extension_chern_character(int genus);
GrrTrace extension_chern_character_trace(int genus);

// Elementary symmetric classes recovered from a Chern character by the
// Newton identities (finite thanks to nilpotency); index i-1 holds c_i.
std::vector<Element> chern_from_character(const Element& character, int rank, int count,
                                          int genus);

// c_1..c_g of the extension bundle: 4^i/i! * w^i.
std::vector<Element> extension_chern_classes(int genus);

} // namespace qcoh
