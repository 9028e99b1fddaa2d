#include "qcoh/rings.hpp"

#include <map>
#include <mutex>

namespace qcoh {

namespace {

std::vector<Generator> phi_generators(int genus) {
    std::vector<Generator> gens;
    gens.reserve(2 * genus);
    for (int i = 1; i <= 2 * genus; ++i)
        gens.push_back({"phi" + std::to_string(i), 1});
    return gens;
}

// Write-once-per-key genus caches.
template <typename Builder>
SignaturePtr cached_signature(int genus, std::map<int, SignaturePtr>& cache, std::mutex& mutex,
                              Builder build) {
    require(genus >= 1, "genus must be at least 1");
    std::scoped_lock lock(mutex);
    auto it = cache.find(genus);
    if (it == cache.end())
        it = cache.emplace(genus, build(genus)).first;
    return it->second;
}

} // namespace

SignaturePtr invariant_ring_signature() {
    static SignaturePtr sig =
        make_signature({{"a", 2}, {"b", 4}, {"g", 6}}, {}, NoTruncation{});
    return sig;
}

SignaturePtr jacobian_signature(int genus) {
    static std::map<int, SignaturePtr> cache;
    static std::mutex mutex;
    return cached_signature(genus, cache, mutex, [](int g) {
        return make_signature({}, phi_generators(g), ExteriorTop{2 * g});
    });
}

SignaturePtr surface_jacobian_signature(int genus) {
    static std::map<int, SignaturePtr> cache;
    static std::mutex mutex;
    return cached_signature(genus, cache, mutex, [](int g) {
        std::vector<Generator> odd;
        for (int i = 1; i <= 2 * g; ++i)
            odd.push_back({"gam" + std::to_string(i), 1});
        for (const auto& phi : phi_generators(g))
            odd.push_back(phi);
        SurfaceRule rule;
        rule.partner.assign(odd.size(), -1);
        for (int i = 0; i < g; ++i) {
            rule.partner[i] = i + g;
            rule.partner[i + g] = i;
        }
        rule.surface_mask = (std::uint64_t{1} << (2 * g)) - 1;
        rule.sigma_even_index = 0;
        return make_signature({{"Sigma", 2}}, std::move(odd), std::move(rule));
    });
}

SignaturePtr x_jacobian_signature(int genus) {
    static std::map<int, SignaturePtr> cache;
    static std::mutex mutex;
    return cached_signature(genus, cache, mutex, [](int g) {
        return make_signature({{"X", 2}}, phi_generators(g), ExteriorTop{2 * g});
    });
}

SignaturePtr n_signature(int genus) {
    static std::map<int, SignaturePtr> cache;
    static std::mutex mutex;
    return cached_signature(genus, cache, mutex, [](int g) {
        return make_signature({{"h", 2}}, phi_generators(g), ExteriorTop{2 * g});
    });
}

SignaturePtr psi_exterior_signature(int genus) {
    static std::map<int, SignaturePtr> cache;
    static std::mutex mutex;
    return cached_signature(genus, cache, mutex, [](int g) {
        std::vector<Generator> odd;
        for (int i = 1; i <= 2 * g; ++i)
            odd.push_back({"psi" + std::to_string(i), 3});
        return make_signature({}, std::move(odd), NoTruncation{});
    });
}

Element omega(const SignaturePtr& sig, int genus) {
    Element w = Element::zero(sig);
    for (int i = 1; i <= genus; ++i)
        w += Element::generator(sig, "phi" + std::to_string(i)) *
             Element::generator(sig, "phi" + std::to_string(i + genus));
    return w;
}

Element universal_line_c1(int genus) {
    auto sig = surface_jacobian_signature(genus);
    Element c = Element::zero(sig);
    for (int i = 1; i <= 2 * genus; ++i)
        c += Element::generator(sig, "gam" + std::to_string(i)) *
             Element::generator(sig, "phi" + std::to_string(i));
    return c;
}

Element sigma_class(int genus) {
    return Element::generator(surface_jacobian_signature(genus), "Sigma");
}

Element gamma_cubic_class(int genus) {
    auto sig = psi_exterior_signature(genus);
    Element g = Element::zero(sig);
    for (int i = 1; i <= genus; ++i)
        g += Element::generator(sig, "psi" + std::to_string(i)) *
             Element::generator(sig, "psi" + std::to_string(i + genus));
    return Rational(-2) * g;
}

} // namespace qcoh
