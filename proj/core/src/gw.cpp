#include "qcoh/gw.hpp"

#include "qcoh/jacobian.hpp"
#include "qcoh/rings.hpp"

#include <bit>

namespace qcoh {

namespace {

// Rename-preserving transport between signatures sharing generator names.
Element transport(const Element& e, const SignaturePtr& target) {
    Element out = Element::zero(target);
    if (e.is_zero())
        return out;
    const auto& src = *e.signature();
    for (const auto& [m, c] : e.terms()) {
        std::vector<std::pair<std::string, int>> even;
        for (int i = 0; i < src.even_count(); ++i)
            if (m.even[i] != 0)
                even.emplace_back(src.even(i).name, m.even[i]);
        std::vector<std::string> odd;
        std::uint64_t mask = m.odd;
        while (mask) {
            int bit = std::countr_zero(mask);
            odd.push_back(src.odd(bit).name);
            mask &= mask - 1;
        }
        out += Element::from_term(target, c, even, odd);
    }
    return out;
}

Rational x_rule_coefficient(int i) {
    // (-8)^i / i!
    Rational value(BigInt(1), factorial(i));
    for (int k = 0; k < i; ++k)
        value *= -8;
    return value;
}

} // namespace

void validate_query(const GWQuery& query) {
    require(query.genus >= 3,
            "line invariants need genus >= 3: at genus 2 the restricted point class "
            "acquires a quantum correction the evaluation formula does not include");
    require(query.a >= 0 && query.b >= 0, "insertion counts must be non-negative");
    for (int index : query.psi)
        require(index >= 1 && index <= 2 * query.genus,
                "psi index " + std::to_string(index) + " outside 1.." +
                    std::to_string(2 * query.genus));
    int need = 6 * query.genus - 2;
    require(query.insertion_degree() == need,
            "degree balance violated: insertions have degree " +
                std::to_string(query.insertion_degree()) + ", expected " +
                std::to_string(need) + " = 6g - 2");
}

Rational gw_direct(const GWQuery& query) {
    validate_query(query);
    const int g = query.genus;
    auto sig = x_jacobian_signature(g);
    Element x = Element::generator(sig, "X");
    Element w = omega(sig, g);

    Element product = (Rational(4) * w + x).pow(query.a) * x.pow(2 * query.b + static_cast<int>(query.psi.size()));
    for (int index : query.psi)
        product = product * Element::generator(sig, "phi" + std::to_string(index));

    // every surviving term must have reached the substitution threshold
    auto x_index = sig->even_index("X");
    for (const auto& [m, c] : product.terms())
        ensure(m.even[*x_index] >= 2 * g - 1,
               "term below the substitution threshold survived the exterior truncation");

    Element substituted = product.substitute_even("X", [&](int exponent) {
        int i = exponent - (2 * g - 1);
        ensure(i >= 0, "substitution rule applied below its threshold");
        return x_rule_coefficient(i) * w.pow(i);
    });
    return integrate_jacobian(transport(substituted, jacobian_signature(g)), g);
}

RestrictedClassTable restricted_class_table(int genus) {
    auto sig = n_signature(genus);
    Element h = Element::generator(sig, "h");
    RestrictedClassTable table;
    table.alpha = Rational(4) * omega(sig, genus) + h;
    table.beta = h * h;
    for (int i = 1; i <= 2 * genus; ++i)
        table.psi.push_back(-(h * Element::generator(sig, "phi" + std::to_string(i))));
    return table;
}

NQuantumRing::NQuantumRing(int genus) : genus_(genus), sig_(n_signature(genus)) {
    require(genus >= 2, "the extension-space ring needs genus >= 2");
    h_ = Element::generator(sig_, "h");
    Element w = omega(sig_, genus);
    for (int i = 1; i <= genus; ++i) {
        Rational c(BigInt(1), factorial(i));
        for (int k = 0; k < i; ++k)
            c *= 4;
        chern_.push_back(c * w.pow(i)); // 4^i/i! w^i
    }
}

Element NQuantumRing::reduce(const Element& x, const Rational& scalar_term) const {
    // h^g -> r - c1 h^{g-1} - ... - cg, from the top power down
    Element rhs = Element::constant(sig_, scalar_term);
    for (int i = 1; i <= genus_; ++i)
        rhs -= chern_[i - 1] * h_.pow(genus_ - i);
    auto h_index = sig_->even_index("h");
    Element current = x;
    while (true) {
        int top = 0;
        for (const auto& [m, c] : current.terms())
            top = std::max(top, m.even[*h_index]);
        if (top < genus_)
            return current;
        current = current.substitute_even("h", [&](int exponent) {
            if (exponent < genus_)
                return h_.pow(exponent);
            return h_.pow(exponent - genus_) * rhs;
        });
    }
}

Element NQuantumRing::top_fibre_coefficient(const Element& reduced) const {
    auto h_index = sig_->even_index("h");
    Element out = Element::zero(jacobian_signature(genus_));
    for (const auto& [m, c] : reduced.terms()) {
        if (m.even[*h_index] != genus_ - 1)
            continue;
        Monomial stripped;
        stripped.even = {};
        stripped.odd = m.odd;
        stripped.degree = m.degree - 2 * (genus_ - 1);
        out += Element::from_canonical_term(jacobian_signature(genus_), std::move(stripped), c);
    }
    return out;
}

Rational gw_via_qhn(const GWQuery& query) {
    validate_query(query);
    const int g = query.genus;
    NQuantumRing ring(g);
    RestrictedClassTable table = restricted_class_table(g);

    Element product = Element::constant(ring.signature(), Rational(1));
    for (int k = 0; k < query.a; ++k)
        product = ring.reduce_quantum(product * table.alpha);
    for (int k = 0; k < query.b; ++k)
        product = ring.reduce_quantum(product * table.beta);
    for (int index : query.psi)
        product = ring.reduce_quantum(product * table.psi[index - 1]);

    Element top = ring.top_fibre_coefficient(product).graded_component(2 * g);
    return integrate_jacobian(top, g);
}

Rational donaldson_line_value(const GWQuery& query) {
    Rational value = gw_direct(query);
    return query.genus % 2 == 1 ? value : -value;
}

std::string donaldson_insertion_label(const GWQuery& query) {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty())
            out += ' ';
        out += piece;
    };
    if (query.a > 0)
        append("(2*Sigma)^" + std::to_string(query.a));
    if (query.b > 0)
        append("(-4*pt)^" + std::to_string(query.b));
    for (int index : query.psi)
        append("gamma#_" + std::to_string(index));
    if (out.empty())
        out = "1";
    return out;
}

Lemma9Report verify_lemma9(int genus) {
    require(genus >= 2, "the hyperplane-power identities need genus >= 2");
    Lemma9Report report;
    report.genus = genus;
    NQuantumRing ring(genus);
    auto nsig = ring.signature();
    auto jsig = jacobian_signature(genus);
    Element w = omega(nsig, genus);
    Element h = ring.hyperplane();
    const int n = 2 * genus;

    for (int i = 0; i <= genus; ++i) {
        Element quantum_reduced = ring.reduce_quantum(h.pow(2 * genus - 1 + i));
        Element classical_reduced = ring.reduce_classical(h.pow(genus - 1 + i));
        Element quantum_target_factor = x_rule_coefficient(i) * w.pow(i);
        Rational segre(BigInt(1), factorial(i)); // (-4)^i / i!
        for (int k = 0; k < i; ++k)
            segre *= -4;
        Element segre_target_factor = segre * w.pow(i);

        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) != n - 2 * i)
                continue;
            Monomial sm;
            sm.even = {0};
            sm.odd = mask;
            sm.degree = n - 2 * i;
            Element s = Element::from_canonical_term(nsig, sm, Rational(1));

            Element quantum_top = transport(
                ring.top_fibre_coefficient(quantum_reduced * s).graded_component(n), jsig);
            Element quantum_expect =
                transport((quantum_target_factor * s).graded_component(n), jsig);
            ++report.checks;
            if (!(quantum_top == quantum_expect))
                report.failures.push_back(
                    {i, mask, true, "quantum top component mismatch"});

            Element segre_top = transport(
                ring.top_fibre_coefficient(classical_reduced * s).graded_component(n), jsig);
            Element segre_expect =
                transport((segre_target_factor * s).graded_component(n), jsig);
            ++report.checks;
            if (!(segre_top == segre_expect))
                report.failures.push_back({i, mask, false, "Segre top component mismatch"});
        }
    }
    return report;
}

std::vector<GWTableRow> gw_table(int genus) {
    require(genus >= 3, "tables follow the evaluation formula, so genus >= 3");
    std::vector<GWTableRow> rows;
    const int need = 6 * genus - 2;
    for (int r = 0; r <= 2 * genus; ++r) {
        if ((need - 3 * r) % 2 != 0 || need - 3 * r < 0)
            continue;
        for (int b = 0; 4 * b <= need - 3 * r; ++b) {
            int rest = need - 3 * r - 4 * b;
            if (rest % 2 != 0)
                continue;
            int a = rest / 2;
            for (int pairs = 0; 2 * pairs <= r; ++pairs) {
                int unpaired = r - 2 * pairs;
                if (pairs + unpaired > genus)
                    continue; // no room for that many mutually unpaired indices
                GWTableRow row;
                row.a = a;
                row.b = b;
                row.pairs = pairs;
                for (int p = 1; p <= pairs; ++p) {
                    row.psi.push_back(p);
                    row.psi.push_back(p + genus);
                }
                for (int u = 0; u < unpaired; ++u)
                    row.psi.push_back(pairs + 1 + u);
                GWQuery query{genus, a, b, row.psi};
                row.value = gw_direct(query);
                Rational via_ring = gw_via_qhn(query);
                ensure(row.value == via_ring,
                       "engine disagreement on a table entry");
                row.donaldson = donaldson_line_value(query);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

} // namespace qcoh
