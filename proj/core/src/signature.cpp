#include "qcoh/signature.hpp"

#include <bit>
#include <unordered_set>

namespace qcoh {

AlgebraSignature::AlgebraSignature(std::vector<Generator> even_gens,
                                   std::vector<Generator> odd_gens,
                                   TruncationRule rule)
    : even_(std::move(even_gens)), odd_(std::move(odd_gens)), rule_(std::move(rule)) {
    require(odd_.size() <= 64, "at most 64 odd generators are supported");
    std::unordered_set<std::string> names;
    for (const auto& g : even_) {
        require(g.degree > 0 && g.degree % 2 == 0,
                "even generator '" + g.name + "' must have positive even degree");
        require(names.insert(g.name).second, "duplicate generator name '" + g.name + "'");
    }
    for (const auto& g : odd_) {
        require(g.degree > 0 && g.degree % 2 == 1,
                "odd generator '" + g.name + "' must have positive odd degree");
        require(names.insert(g.name).second, "duplicate generator name '" + g.name + "'");
    }
    if (const auto* surface = std::get_if<SurfaceRule>(&rule_)) {
        require(surface->partner.size() == odd_.size(),
                "surface rule partner table must cover every odd generator");
        require(surface->sigma_even_index >= 0 && surface->sigma_even_index < even_count(),
                "surface rule needs a valid fundamental-class generator");
    }
}

std::optional<int> AlgebraSignature::even_index(std::string_view name) const {
    for (int i = 0; i < even_count(); ++i)
        if (even_[i].name == name)
            return i;
    return std::nullopt;
}

std::optional<int> AlgebraSignature::odd_index(std::string_view name) const {
    for (int i = 0; i < odd_count(); ++i)
        if (odd_[i].name == name)
            return i;
    return std::nullopt;
}

int AlgebraSignature::odd_degree_of_mask(std::uint64_t mask) const {
    int degree = 0;
    while (mask) {
        int bit = std::countr_zero(mask);
        degree += odd_[bit].degree;
        mask &= mask - 1;
    }
    return degree;
}

bool AlgebraSignature::operator==(const AlgebraSignature& other) const {
    return even_ == other.even_ && odd_ == other.odd_ && rule_ == other.rule_;
}

SignaturePtr make_signature(std::vector<Generator> even_gens,
                            std::vector<Generator> odd_gens,
                            TruncationRule rule) {
    return std::make_shared<const AlgebraSignature>(std::move(even_gens), std::move(odd_gens),
                                                    std::move(rule));
}

} // namespace qcoh
