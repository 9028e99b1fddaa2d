#pragma once

#include "qcoh/relations.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace qcoh {

enum class GradingMode { Homogeneous, Filtered };

// Default working degree bound for reduction tables: max(36, 3*(6g-6)),
// overridable globally (CLI --max-degree) or via QCOH_MAX_DEGREE.
int default_working_degree_bound(int genus);
void set_working_degree_bound_override(std::optional<int> bound);

// Normal forms, monomial basis and dimension bookkeeping for the quotient
// of Q[a,b,g] by a relation triple. The basis is {a^i b^j g^k : i+j+k < g}
// in either grading mode; reduction is degreewise exact linear algebra over
// the relation multiples, pivoting on the degree-lex greatest non-basis
// monomial. Reduction tables fill lazily under a lock; reads are safe from
// any thread.
class QuotientPresentation {
public:
    static std::shared_ptr<const QuotientPresentation> classical(int genus);
    static std::shared_ptr<const QuotientPresentation> quantum(int genus,
                                                               bool allow_conjectural = false);
    static std::shared_ptr<const QuotientPresentation> custom(int genus, RelationTriple triple,
                                                              GradingMode mode);

    int genus() const { return genus_; }
    GradingMode mode() const { return mode_; }
    const RelationTriple& relations() const { return triple_; }
    bool conjectural() const { return triple_.conjectural; }
    int working_degree_bound() const { return bound_; }

    long long dimension() const; // C(genus + 2, 3)
    const std::vector<Monomial>& basis() const { return basis_; }
    std::vector<Element> basis_elements() const;
    bool is_basis_monomial(const Monomial& m) const;

    // Unique representative supported on basis monomials; linear and
    // idempotent, and zero exactly on the relation ideal.
    Element normal_form(const Element& x) const;

private:
    QuotientPresentation(int genus, RelationTriple triple, GradingMode mode);

    struct Rewrite {
        Element top_basis_part; // degree-D, basis-supported
        Element lower_part;     // strictly lower degree (filtered mode only)
    };
    struct DegreeTable {
        std::map<Monomial, Rewrite, MonomialDescending> rewrites;
    };

    const DegreeTable& table_for_degree(int degree) const;
    DegreeTable build_table(int degree) const;

    int genus_;
    RelationTriple triple_;
    GradingMode mode_;
    int bound_;
    std::vector<Monomial> basis_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, DegreeTable> tables_;
};

using PresentationPtr = std::shared_ptr<const QuotientPresentation>;

// Monomials of total degree `degree` in the three-generator ring,
// descending degree-lex.
std::vector<Monomial> invariant_monomials_of_degree(int degree);

// Dimensions of the graded pieces of the classical quotient, indexed by
// degree 0..6g-6.
std::vector<long long> poincare_polynomial_invariant(int genus);

struct SpSummand {
    int k = 0;
    long long primitive_dim = 0; // dim of the k-th primitive exterior piece
    long long quotient_dim = 0;  // C(g-k+2, 3)
    long long dim = 0;           // product
};

struct SpDecomposition {
    int genus = 0;
    std::vector<SpSummand> summands; // k = 0..g
    long long total = 0;
};

SpDecomposition sp_decomposition(int genus);

long long primitive_dimension_formula(int genus, int k); // C(2g,k) - C(2g,k-2)
// Independent counting path: kernel of multiplication by the invariant
// cubic class to the power g-k+1 on the k-th exterior power.
long long primitive_dimension_by_kernel(int genus, int k);

} // namespace qcoh
