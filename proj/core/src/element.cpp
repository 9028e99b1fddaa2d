#include "qcoh/element.hpp"

#include <algorithm>
#include <bit>

namespace qcoh {

bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree)
        return a.degree < b.degree;
    if (a.even != b.even)
        return a.even < b.even;
    return a.odd < b.odd;
}

int koszul_merge_sign(std::uint64_t left, std::uint64_t right) {
    int crossings = 0;
    std::uint64_t r = right;
    while (r) {
        int bit = std::countr_zero(r);
        // bits of `left` strictly above `bit` must be crossed
        std::uint64_t above = bit == 63 ? 0 : left >> (bit + 1);
        crossings += std::popcount(above);
        r &= r - 1;
    }
    return crossings % 2 == 0 ? 1 : -1;
}

namespace {

int monomial_degree(const AlgebraSignature& sig, const std::vector<int>& even,
                    std::uint64_t odd) {
    int degree = 0;
    for (int i = 0; i < sig.even_count(); ++i)
        degree += even[i] * sig.even(i).degree;
    degree += sig.odd_degree_of_mask(odd);
    return degree;
}

// Sign of extracting the word positions holding `pair_mask` (two bits) to the
// front of the canonical word `odd`.
int pair_extraction_sign(std::uint64_t odd, std::uint64_t pair_mask) {
    int lo = std::countr_zero(pair_mask);
    int hi = 63 - std::countl_zero(pair_mask);
    std::uint64_t below_lo = lo == 0 ? 0 : odd & ((std::uint64_t{1} << lo) - 1);
    std::uint64_t below_hi = odd & ((std::uint64_t{1} << hi) - 1);
    int crossings = std::popcount(below_lo) + std::popcount(below_hi) - 1;
    return crossings % 2 == 0 ? 1 : -1;
}

} // namespace

Element Element::zero(SignaturePtr sig) {
    Element e;
    e.sig_ = std::move(sig);
    return e;
}

Element Element::constant(SignaturePtr sig, Rational value) {
    Element e = zero(std::move(sig));
    if (value != 0) {
        Monomial m;
        m.even.assign(e.sig_->even_count(), 0);
        e.terms_.emplace(std::move(m), std::move(value));
    }
    return e;
}

Element Element::generator(SignaturePtr sig, std::string_view name) {
    Element e = zero(std::move(sig));
    Monomial m;
    m.even.assign(e.sig_->even_count(), 0);
    if (auto idx = e.sig_->even_index(name)) {
        m.even[*idx] = 1;
        m.degree = e.sig_->even(*idx).degree;
    } else if (auto odd = e.sig_->odd_index(name)) {
        m.odd = std::uint64_t{1} << *odd;
        m.degree = e.sig_->odd(*odd).degree;
    } else {
        throw PreconditionError("unknown generator '" + std::string(name) + "'");
    }
    e.add_raw_term(std::move(m), Rational(1));
    return e;
}

Element Element::from_term(SignaturePtr sig, Rational coeff,
                           const std::vector<std::pair<std::string, int>>& even_powers,
                           const std::vector<std::string>& odd_factors) {
    Element e = zero(std::move(sig));
    if (coeff == 0)
        return e;
    Monomial m;
    m.even.assign(e.sig_->even_count(), 0);
    for (const auto& [name, exp] : even_powers) {
        auto idx = e.sig_->even_index(name);
        require(idx.has_value(), "unknown even generator '" + name + "'");
        require(exp >= 0, "negative exponent for '" + name + "'");
        m.even[*idx] += exp;
    }
    // Insertion sort over bit positions; each crossing flips the sign.
    int sign = 1;
    for (const auto& name : odd_factors) {
        auto idx = e.sig_->odd_index(name);
        require(idx.has_value(), "unknown odd generator '" + name + "'");
        std::uint64_t bit = std::uint64_t{1} << *idx;
        if (m.odd & bit)
            return e; // repeated odd generator annihilates the term
        std::uint64_t above = *idx == 63 ? 0 : m.odd >> (*idx + 1);
        if (std::popcount(above) % 2 == 1)
            sign = -sign;
        m.odd |= bit;
    }
    m.degree = monomial_degree(*e.sig_, m.even, m.odd);
    e.add_raw_term(std::move(m), sign > 0 ? coeff : -coeff);
    return e;
}

Element Element::from_canonical_term(SignaturePtr sig, Monomial m, Rational coeff) {
    Element e = zero(std::move(sig));
    e.add_raw_term(std::move(m), std::move(coeff));
    return e;
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Element::max_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree;
}

int Element::min_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree;
}

bool Element::is_homogeneous() const {
    return terms_.empty() || max_degree() == min_degree();
}

std::vector<int> Element::degrees() const {
    std::vector<int> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        if (out.empty() || out.back() != it->first.degree)
            out.push_back(it->first.degree);
    return out;
}

Element Element::graded_component(int degree) const {
    Element out = zero(sig_);
    for (const auto& [m, c] : terms_)
        if (m.degree == degree)
            out.terms_.emplace(m, c);
    return out;
}

Element Element::substitute_even(std::string_view name,
                                 const std::function<Element(int)>& rule) const {
    if (!sig_)
        return *this;
    auto idx = sig_->even_index(name);
    require(idx.has_value(), "unknown even generator '" + std::string(name) + "'");
    Element out = zero(sig_);
    for (const auto& [m, c] : terms_) {
        int exp = m.even[*idx];
        if (exp == 0) {
            out.add_term(m, c);
            continue;
        }
        Monomial rest = m;
        rest.even[*idx] = 0;
        rest.degree = m.degree - exp * sig_->even(*idx).degree;
        Element stub = zero(sig_);
        stub.add_raw_term(std::move(rest), c);
        out += rule(exp) * stub;
    }
    return out;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

void Element::check_compatible(const Element& a, const Element& b) {
    if (!a.sig_ || !b.sig_)
        return;
    require(same_signature(a.sig_, b.sig_), "elements of different algebras cannot be combined");
}

Element& Element::operator+=(const Element& other) {
    check_compatible(*this, other);
    if (!sig_)
        sig_ = other.sig_;
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    check_compatible(*this, other);
    if (!sig_)
        sig_ = other.sig_;
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Element::add_raw_term(Monomial m, Rational c) {
    if (c == 0 || !sig_)
        return;
    const auto& rule = sig_->truncation();
    if (const auto* top = std::get_if<ExteriorTop>(&rule)) {
        if (sig_->odd_degree_of_mask(m.odd) > top->max_odd_degree)
            return;
    } else if (const auto* surface = std::get_if<SurfaceRule>(&rule)) {
        std::uint64_t surf = m.odd & surface->surface_mask;
        int surface_degree = std::popcount(surf) + 2 * m.even[surface->sigma_even_index];
        if (surface_degree > 2)
            return;
        if (std::popcount(surf) == 2) {
            int lo = std::countr_zero(surf);
            int hi = 63 - std::countl_zero(surf);
            if (surface->partner[lo] != hi)
                return; // non-partner surface classes multiply to zero
            int sign = pair_extraction_sign(m.odd, surf);
            m.odd &= ~surf;
            m.even[surface->sigma_even_index] += 1;
            if (sign < 0)
                c = -c;
        }
    }
    add_term(m, c);
}

Element operator*(const Element& a, const Element& b) {
    Element::check_compatible(a, b);
    Element out = Element::zero(a.sig_ ? a.sig_ : b.sig_);
    if (!out.sig_)
        return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.odd & mb.odd)
                continue; // repeated odd generator
            Monomial m;
            m.even.resize(ma.even.size());
            for (std::size_t i = 0; i < ma.even.size(); ++i)
                m.even[i] = ma.even[i] + mb.even[i];
            m.odd = ma.odd | mb.odd;
            m.degree = ma.degree + mb.degree;
            Rational c = ca * cb;
            if (koszul_merge_sign(ma.odd, mb.odd) < 0)
                c = -c;
            out.add_raw_term(std::move(m), std::move(c));
        }
    }
    return out;
}

Element operator*(const Rational& c, const Element& e) {
    Element out = Element::zero(e.sig_);
    if (c == 0)
        return out;
    for (const auto& [m, coeff] : e.terms_)
        out.terms_.emplace(m, c * coeff);
    return out;
}

Element Element::pow(int exponent) const {
    require(exponent >= 0, "negative power of a ring element");
    require(sig_ != nullptr, "cannot raise the typeless zero to a power");
    Element result = constant(sig_, Rational(1));
    for (int i = 0; i < exponent; ++i)
        result = result * *this;
    return result;
}

bool Element::operator==(const Element& other) const {
    if (terms_.empty() && other.terms_.empty())
        return true;
    if (sig_ && other.sig_ && !same_signature(sig_, other.sig_))
        return false;
    return terms_ == other.terms_;
}

} // namespace qcoh
