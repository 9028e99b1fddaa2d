#pragma once

#include "qcoh/element.hpp"

namespace qcoh {

// Q[a, b, g] with deg a = 2, deg b = 4, deg g = 6: the three-generator ring
// carrying both the ordinary invariant presentation and (as pure
// bookkeeping) the hatted quantum one.
SignaturePtr invariant_ring_signature();

// Exterior algebra on phi1..phi{2g}, each of degree 1.
SignaturePtr jacobian_signature(int genus);

// Surface x Jacobian classes: gam1..gam{2g} and phi1..phi{2g} of degree 1
// plus the even fundamental class Sigma of degree 2, with the surface
// multiplication rule gam_i * gam_{i+g} = Sigma.
SignaturePtr surface_jacobian_signature(int genus);

// Jacobian classes with one even degree-2 variable adjoined.
SignaturePtr x_jacobian_signature(int genus); // variable "X"
SignaturePtr n_signature(int genus);          // hyperplane class "h"

// Exterior algebra on psi1..psi{2g} of degree 3.
SignaturePtr psi_exterior_signature(int genus);

// The symplectic form w = sum_{i<=g} phi_i * phi_{i+g} in the given
// signature (any signature containing the phi generators).
Element omega(const SignaturePtr& sig, int genus);

// c1 of the universal line bundle, sum_i gam_i * phi_i.
Element universal_line_c1(int genus);

Element sigma_class(int genus);

// -2 * sum_{i<=g} psi_i * psi_{i+g} in the psi exterior algebra.
Element gamma_cubic_class(int genus);

} // namespace qcoh
