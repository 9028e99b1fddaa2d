#pragma once

#include "qcoh/rational.hpp"
#include "qcoh/signature.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

namespace qcoh {

// Canonical monomial: even exponents aligned with the signature's even
// generators, odd part as a bit set (ascending generator order, the
// reordering sign lives in the coefficient), and the cached total degree.
struct Monomial {
    std::vector<int> even;
    std::uint64_t odd = 0;
    int degree = 0;

    bool operator==(const Monomial&) const = default;
};

// Degree-lexicographic order on (total degree, even exponents, odd bit set).
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(b, a); }
};

// Sign of merging two disjoint canonical odd words (all odd generators have
// odd degree, so each crossing contributes -1).
int koszul_merge_sign(std::uint64_t left, std::uint64_t right);

// A sparse exact-rational linear combination of monomials; the universal
// carrier for every ring in the library. Immutable value semantics: all
// operations are pure and safe to use concurrently.
class Element {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    // Zero of no particular algebra; usable as an accumulator seed.
    Element() = default;

    static Element zero(SignaturePtr sig);
    static Element constant(SignaturePtr sig, Rational value);
    static Element generator(SignaturePtr sig, std::string_view name);
    // Canonicalizes: sorts the odd word (tracking the sign), applies the
    // signature's truncation rule, drops zero coefficients.
    static Element from_term(SignaturePtr sig, Rational coeff,
                             const std::vector<std::pair<std::string, int>>& even_powers,
                             const std::vector<std::string>& odd_factors);
    // Trusts the monomial to be canonical (odd word ascending, degree
    // consistent); still applies the truncation rule.
    static Element from_canonical_term(SignaturePtr sig, Monomial m, Rational coeff);

    const SignaturePtr& signature() const { return sig_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;

    // Highest/lowest total degree of a nonzero term; zero element -> 0.
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    std::vector<int> degrees() const;

    Element graded_component(int degree) const;

    // Replaces each term c * name^k * m (k >= 1) by c * rule(k) * m.
    Element substitute_even(std::string_view name,
                            const std::function<Element(int)>& rule) const;

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Rational& c, const Element& e);
    friend Element operator*(const Element& e, const Rational& c) { return c * e; }

    Element pow(int exponent) const;

    bool operator==(const Element& other) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    // Truncation-aware insertion used by multiplication and construction.
    void add_raw_term(Monomial m, Rational c);
    static void check_compatible(const Element& a, const Element& b);

    SignaturePtr sig_;
    TermMap terms_;
};

} // namespace qcoh
