#include "qcoh/relations.hpp"

#include "qcoh/rings.hpp"

#include <map>
#include <mutex>

namespace qcoh {

namespace {

struct Generators {
    Element a, b, g;
};

Generators ring_generators() {
    auto sig = invariant_ring_signature();
    return {Element::generator(sig, "a"), Element::generator(sig, "b"),
            Element::generator(sig, "g")};
}

std::array<Element, 3> advance_classical(const std::array<Element, 3>& q, int genus_from) {
    auto [a, b, g] = ring_generators();
    const Rational step(2 * genus_from, genus_from + 1);
    return {a * q[0] + Rational(genus_from * genus_from) * q[1],
            b * q[0] + step * q[2],
            g * q[0]};
}

std::array<Element, 3> advance_floer(const std::array<Element, 3>& r, int genus_from) {
    auto [a, b, g] = ring_generators();
    const Rational eight(genus_from % 2 == 0 ? -8 : 8); // (-1)^{genus_from + 1} * 8
    const Rational step = genus_from == 0 ? Rational(0)
                                          : Rational(2 * genus_from, genus_from + 1);
    auto sig = invariant_ring_signature();
    return {a * r[0] + Rational(genus_from * genus_from) * r[1],
            (b + Element::constant(sig, eight)) * r[0] + step * r[2],
            g * r[0]};
}

template <typename Advance>
std::array<Element, 3> recurse(int genus, int base_genus, std::array<Element, 3> base,
                               std::map<int, std::array<Element, 3>>& cache, std::mutex& mutex,
                               Advance advance) {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(genus); it != cache.end())
        return it->second;
    if (cache.empty())
        cache.emplace(base_genus, base);
    int have = cache.rbegin()->first;
    auto current = cache.rbegin()->second;
    while (have < genus) {
        current = advance(current, have);
        ++have;
        cache.emplace(have, current);
    }
    return cache.at(genus);
}

} // namespace

RelationTriple classical_relations(int genus) {
    require(genus >= 1, "classical relations need genus >= 1");
    static std::map<int, std::array<Element, 3>> cache;
    static std::mutex mutex;
    auto [a, b, g] = ring_generators();
    auto r = recurse(genus, 1, {a, b, g}, cache, mutex, advance_classical);
    return {genus, RelationFlavor::Classical, std::move(r), false};
}

RelationTriple floer_relations(int genus) {
    require(genus >= 1, "deformed relations need genus >= 1");
    static std::map<int, std::array<Element, 3>> cache;
    static std::mutex mutex;
    auto sig = invariant_ring_signature();
    std::array<Element, 3> base = {Element::constant(sig, Rational(1)), Element::zero(sig),
                                   Element::zero(sig)};
    auto r = recurse(genus, 0, std::move(base), cache, mutex, advance_floer);
    return {genus, RelationFlavor::Floer, std::move(r), false};
}

Element hat_transform(int genus, const Element& x, int base_degree) {
    if (genus % 2 == 0)
        return x;
    Element out = Element::zero(x.signature());
    for (int d : x.degrees()) {
        Element piece = x.graded_component(d);
        int offset = ((base_degree - d) % 8 + 8) % 8;
        out += offset == 4 ? -piece : piece;
    }
    return out;
}

RelationTriple quantum_relations(int genus) {
    RelationTriple floer = floer_relations(genus);
    RelationTriple out;
    out.genus = genus;
    out.flavor = RelationFlavor::QuantumHat;
    out.conjectural = genus >= 4;
    for (int i = 0; i < 3; ++i)
        out.r[i] = hat_transform(genus, floer.r[i], floer.top_degree(i));
    return out;
}

std::pair<Element, Element> two_leading_terms(int genus, int index_1_based) {
    require(genus >= 3, "the two-leading-terms formula needs genus >= 3; "
                        "genus 2 carries an extra quantum correction");
    require(index_1_based >= 1 && index_1_based <= 3, "relation index must be 1, 2 or 3");
    RelationTriple q = quantum_relations(genus);
    int d = q.top_degree(index_1_based - 1);
    const Element& rel = q.r[index_1_based - 1];
    return {rel.graded_component(d), rel.graded_component(d - 4)};
}

} // namespace qcoh
