#pragma once

#include "qcoh/element.hpp"

#include <string>
#include <vector>

namespace qcoh {

// A line Gromov-Witten invariant request: insertions alpha^a beta^b
// psi_{i1}..psi_{ir} with total degree 2a + 4b + 3r = 6g - 2. Indices may
// repeat or come unordered (the value is antisymmetric in them).
struct GWQuery {
    int genus = 0;
    int a = 0;
    int b = 0;
    std::vector<int> psi;

    int insertion_degree() const { return 2 * a + 4 * b + 3 * static_cast<int>(psi.size()); }
};

// Throws PreconditionError naming the violated invariant. The evaluation
// formula needs genus >= 3: at genus 2 the hyperplane-class square on the
// extension space picks up a quantum correction the formula does not carry.
void validate_query(const GWQuery& query);

// Substitution-formula engine: expand (4w + X)^a (X^2)^b phi_{i1}..phi_{ir}
// X^r over the Jacobian and replace X^{2g-1+i} by (-8)^i/i! w^i before
// integrating. Terms below the substitution threshold are provably killed by
// the exterior truncation; this is asserted, never silently dropped.
Rational gw_direct(const GWQuery& query);

// Quantum-ring engine on the extension space N: multiply the restricted
// classes (4w + h, h^2, -h phi_i) reducing by the deformed hyperplane
// relation after every step, then read off the top component.
Rational gw_via_qhn(const GWQuery& query);

// Donaldson-side value: (-1)^{g-1} times the invariant.
Rational donaldson_line_value(const GWQuery& query);
std::string donaldson_insertion_label(const GWQuery& query);

// The restriction dictionary on N: alpha -> 4w + h, beta -> h^2,
// psi_i -> -h phi_i.
struct RestrictedClassTable {
    Element alpha;
    Element beta;
    std::vector<Element> psi; // index i-1 holds the image of psi_i
};
RestrictedClassTable restricted_class_table(int genus);

// The cohomology of N as a module over the exterior algebra: polynomials in
// the hyperplane class h reduced by h^g + c1 h^{g-1} + ... + cg = r with
// r = 1 (quantum) or r = 0 (classical).
class NQuantumRing {
public:
    explicit NQuantumRing(int genus);

    int genus() const { return genus_; }
    const SignaturePtr& signature() const { return sig_; }
    const Element& hyperplane() const { return h_; }
    const std::vector<Element>& chern() const { return chern_; }

    Element reduce_quantum(const Element& x) const { return reduce(x, Rational(1)); }
    Element reduce_classical(const Element& x) const { return reduce(x, Rational(0)); }

    // Coefficient of h^{g-1} as a Jacobian class.
    Element top_fibre_coefficient(const Element& reduced) const;

private:
    Element reduce(const Element& x, const Rational& scalar_term) const;

    int genus_;
    SignaturePtr sig_;
    Element h_;
    std::vector<Element> chern_;
};

struct Lemma9Failure {
    int i = 0;
    std::uint64_t word = 0;
    bool quantum = false; // which of the two identities failed
    std::string detail;
};

struct Lemma9Report {
    int genus = 0;
    long long checks = 0;
    std::vector<Lemma9Failure> failures;
    bool ok() const { return failures.empty(); }
};

// For every i = 0..g and every exterior monomial s of degree 2g - 2i, checks
// that the quantum top component of h^{2g-1+i} s is (-8)^i/i! w^i s and the
// classical (Segre) top component of h^{g-1+i} s is (-4)^i/i! w^i s.
Lemma9Report verify_lemma9(int genus);

struct GWTableRow {
    int a = 0;
    int b = 0;
    int pairs = 0;           // symplectically paired psi indices
    std::vector<int> psi;    // orbit representative
    Rational value;
    Rational donaldson;
};

// All legal queries up to symplectic symmetry (orbits classified by the
// number of paired indices), evaluated with both engines.
std::vector<GWTableRow> gw_table(int genus);

} // namespace qcoh
