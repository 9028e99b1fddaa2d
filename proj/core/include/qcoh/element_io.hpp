#pragma once

#include "qcoh/element.hpp"

#include <map>
#include <string>
#include <string_view>

namespace qcoh {

// Display/parse aliases: signature generator name -> surface spelling (for
// the hatted presentations the kernel names stay a/b/g while the CLI shows
// ah/bh/gh). Unlisted names pass through.
using NameAliases = std::map<std::string, std::string, std::less<>>;

// Extra parse-time symbols that expand to whole elements (e.g. "w" for the
// symplectic form on the Jacobian).
using NamedConstants = std::map<std::string, Element, std::less<>>;

// Canonical text form, e.g. "3/2*a^2*b - 8*g". Leading term first; term
// order is the kernel's degree-lexicographic order. Zero prints as "0".
std::string element_to_text(const Element& e, const NameAliases& aliases = {});

// Expression grammar over the canonical form: rationals, generator names,
// '*', '^' with non-negative integer exponents, '+', '-', parentheses.
Element parse_element(const SignaturePtr& sig, std::string_view text,
                      const NameAliases& aliases = {}, const NamedConstants& constants = {});

} // namespace qcoh
