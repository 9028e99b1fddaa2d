#pragma once

#include "qcoh/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qcoh {

struct Generator {
    std::string name;
    int degree = 0;

    bool operator==(const Generator&) const = default;
};

struct NoTruncation {
    bool operator==(const NoTruncation&) const = default;
};

// Kill any monomial whose odd part has total degree above the cap.
struct ExteriorTop {
    int max_odd_degree = 0;

    bool operator==(const ExteriorTop&) const = default;
};

// Cohomology of a closed oriented surface on the odd side: the generators in
// surface_mask pair up (partner[i] = i's symplectic partner, -1 for
// non-surface generators), a positively ordered pair multiplies to the even
// fundamental class at sigma_even_index, and any monomial of surface degree
// above 2 dies.
struct SurfaceRule {
    std::uint64_t surface_mask = 0;
    std::vector<int> partner;
    int sigma_even_index = -1;

    bool operator==(const SurfaceRule&) const = default;
};

using TruncationRule = std::variant<NoTruncation, ExteriorTop, SurfaceRule>;

// Immutable description of a graded-commutative algebra: even generators
// (commuting, positive even degree), odd generators (anticommuting,
// square-zero, positive odd degree) and a truncation rule applied eagerly
// during multiplication.
class AlgebraSignature {
public:
    AlgebraSignature(std::vector<Generator> even_gens,
                     std::vector<Generator> odd_gens,
                     TruncationRule rule = NoTruncation{});

    int even_count() const { return static_cast<int>(even_.size()); }
    int odd_count() const { return static_cast<int>(odd_.size()); }
    const Generator& even(int index) const { return even_[index]; }
    const Generator& odd(int index) const { return odd_[index]; }

    std::optional<int> even_index(std::string_view name) const;
    std::optional<int> odd_index(std::string_view name) const;

    const TruncationRule& truncation() const { return rule_; }

    int odd_degree_of_mask(std::uint64_t mask) const;

    bool operator==(const AlgebraSignature& other) const;

private:
    std::vector<Generator> even_;
    std::vector<Generator> odd_;
    TruncationRule rule_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

SignaturePtr make_signature(std::vector<Generator> even_gens,
                            std::vector<Generator> odd_gens,
                            TruncationRule rule = NoTruncation{});

// Elements of distinct (non-equal) signatures never mix.
inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

} // namespace qcoh
