#include "qcoh/jacobian.hpp"

#include "qcoh/rings.hpp"

#include <bit>

namespace qcoh {

namespace {

// Parity of the permutation taking the ascending word phi_1..phi_{2g} to the
// interleaved volume word phi_1 phi_{1+g} phi_2 phi_{2+g} ...
int volume_orientation_sign(int genus) {
    std::vector<int> word;
    word.reserve(2 * genus);
    for (int i = 1; i <= genus; ++i) {
        word.push_back(i);
        word.push_back(i + genus);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

std::string volume_form_label(int genus) {
    std::string out;
    for (int i = 1; i <= genus; ++i) {
        if (!out.empty())
            out += '^';
        out += "phi" + std::to_string(i) + "^phi" + std::to_string(i + genus);
    }
    return out;
}

Rational integrate_jacobian(const Element& jacobian_class, int genus) {
    if (jacobian_class.is_zero())
        return Rational(0);
    const auto& sig = jacobian_class.signature();
    require(same_signature(sig, jacobian_signature(genus)),
            "integration expects a Jacobian exterior class of the given genus");
    Monomial top;
    top.even = {};
    top.odd = (std::uint64_t{1} << (2 * genus)) - 1;
    top.degree = 2 * genus;
    return jacobian_class.coefficient(top) * volume_orientation_sign(genus);
}

Element pushforward_sigma(const Element& surface_jacobian_class, int genus) {
    auto target = jacobian_signature(genus);
    if (surface_jacobian_class.is_zero())
        return Element::zero(target);
    require(same_signature(surface_jacobian_class.signature(),
                           surface_jacobian_signature(genus)),
            "pushforward expects a surface-Jacobian class of the given genus");
    std::uint64_t gamma_mask = (std::uint64_t{1} << (2 * genus)) - 1;
    Element out = Element::zero(target);
    for (const auto& [m, c] : surface_jacobian_class.terms()) {
        if (m.even[0] == 0)
            continue; // no surface fundamental class: integrates to zero
        ensure(m.even[0] == 1 && (m.odd & gamma_mask) == 0,
               "canonical surface class exceeded surface degree 2");
        Monomial shifted;
        shifted.even = {};
        shifted.odd = m.odd >> (2 * genus);
        shifted.degree = m.degree - 2;
        out += Element::from_canonical_term(target, std::move(shifted), c);
    }
    return out;
}

GrrTrace extension_chern_character_trace(int genus) {
    require(genus >= 2, "the extension bundle lives over genus >= 2");
    auto sig = surface_jacobian_signature(genus);
    Element one = Element::constant(sig, Rational(1));
    Element c1 = universal_line_c1(genus);
    Element sigma = sigma_class(genus);

    Element c1_squared = c1 * c1;
    ensure((c1_squared * c1).is_zero(), "c1^3 of the universal line bundle must vanish");

    GrrTrace trace;
    Element ch_line = one + c1 + Rational(1, 2) * c1_squared;
    trace.steps.emplace_back("ch L = 1 + c1(L) + c1(L)^2/2", ch_line);

    Element ch_line_sq = ch_line * ch_line;
    trace.steps.emplace_back("(ch L)^2", ch_line_sq);

    // degree-1 determinant twist and Todd class of the surface factor
    Element dual_twist = one - sigma;
    Element todd = one - Rational(genus - 1) * sigma;
    Element integrand = ch_line_sq * dual_twist * todd;
    trace.steps.emplace_back("(ch L)^2 * (1 - Sigma) * (1 - (g-1)*Sigma)", integrand);

    Element pushed = pushforward_sigma(integrand, genus);
    trace.steps.emplace_back("p_* (coefficient of Sigma)", pushed);

    trace.character = -pushed;
    trace.doubled = Rational(2) * trace.character;
    return trace;
}

Element extension_chern_character(int genus) {
    return extension_chern_character_trace(genus).character;
}

std::vector<Element> chern_from_character(const Element& character, int rank, int count,
                                          int genus) {
    auto sig = jacobian_signature(genus);
    require(same_signature(character.signature(), sig),
            "character must live in the Jacobian exterior algebra");
    require(character.graded_component(0) ==
                Element::constant(sig, Rational(rank)),
            "character degree-0 part must equal the rank");
    // power sums p_k = k! * (degree-2k component), then Newton's identities
    std::vector<Element> power_sums(count + 1, Element::zero(sig));
    for (int k = 1; k <= count; ++k)
        power_sums[k] = Rational(factorial(k)) * character.graded_component(2 * k);
    std::vector<Element> elementary(count + 1, Element::zero(sig));
    elementary[0] = Element::constant(sig, Rational(1));
    for (int k = 1; k <= count; ++k) {
        Element acc = Element::zero(sig);
        for (int j = 1; j <= k; ++j) {
            Element term = elementary[k - j] * power_sums[j];
            acc += j % 2 == 1 ? term : -term;
        }
        elementary[k] = Rational(1, k) * acc;
    }
    return {elementary.begin() + 1, elementary.end()};
}

std::vector<Element> extension_chern_classes(int genus) {
    return chern_from_character(extension_chern_character(genus), genus, genus, genus);
}

} // namespace qcoh
