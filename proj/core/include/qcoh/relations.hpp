#pragma once

#include "qcoh/element.hpp"

#include <array>
#include <utility>

namespace qcoh {

enum class RelationFlavor { Classical, Floer, QuantumHat };

// The three ideal generators of a presentation of the invariant cohomology
// ring, per genus and flavor. Top components are homogeneous of degrees
// 2g, 2g+2, 2g+4.
struct RelationTriple {
    int genus = 0;
    RelationFlavor flavor = RelationFlavor::Classical;
    std::array<Element, 3> r;
    bool conjectural = false; // quantum flavor beyond the proven range

    const Element& operator[](int i) const { return r[i]; }
    int top_degree(int i) const { return 2 * genus + 2 * i + 2; } // i = 0,1,2
};

// Homogeneous generators of the classical relation ideal, by the one-step
// genus recursion from the base (a, b, g).
RelationTriple classical_relations(int genus);

// Inhomogeneous deformations with the same leading terms, by the recursion
// from (1, 0, 0) one genus lower; the coefficient of a^genus in the third
// generator is zero.
RelationTriple floer_relations(int genus);

// Sign twist: identity for even genus; for odd genus negates every
// homogeneous component of degree congruent to base_degree - 4 mod 8.
Element hat_transform(int genus, const Element& x, int base_degree);

// Hat-twisted deformed relations; exact presentations for genus <= 3,
// flagged conjectural beyond.
RelationTriple quantum_relations(int genus);

// (top component, first correction) of the quantum relation, i.e. the
// graded pieces in degrees d and d-4 where d is the top degree. Requires
// genus >= 3; the two terms are unconditionally proven there.
std::pair<Element, Element> two_leading_terms(int genus, int index_1_based);

} // namespace qcoh
