#include "qcoh/quotient.hpp"

#include "qcoh/rings.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>

namespace qcoh {

namespace {

std::atomic<int> g_bound_override{-1};

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

Element monomial_element(const SignaturePtr& sig, const Monomial& m, Rational c = Rational(1)) {
    return Element::from_canonical_term(sig, m, std::move(c));
}

void validate_triple(const RelationTriple& triple) {
    RelationTriple q = classical_relations(triple.genus);
    for (int i = 0; i < 3; ++i) {
        int d = triple.top_degree(i);
        ensure(triple.r[i].graded_component(d) == q.r[i],
               "relation triple leading terms must be the classical generators");
        for (int comp : triple.r[i].degrees())
            ensure((d - comp) % 4 == 0, "relation components must be graded mod 4");
    }
    if (triple.flavor != RelationFlavor::Classical) {
        Monomial ag;
        ag.even = {triple.genus, 0, 0};
        ag.degree = 2 * triple.genus;
        ensure(triple.r[2].coefficient(ag) == 0,
               "third relation must have no a^genus component");
    }
}

} // namespace

int default_working_degree_bound(int genus) {
    int override_bound = g_bound_override.load();
    if (override_bound > 0)
        return override_bound;
    if (const char* env = std::getenv("QCOH_MAX_DEGREE")) {
        int parsed = std::atoi(env);
        if (parsed > 0)
            return parsed;
    }
    return std::max(36, 3 * (6 * genus - 6));
}

void set_working_degree_bound_override(std::optional<int> bound) {
    g_bound_override.store(bound.value_or(-1));
}

std::vector<Monomial> invariant_monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || degree % 2 != 0)
        return out;
    for (int k = 0; 6 * k <= degree; ++k)
        for (int j = 0; 6 * k + 4 * j <= degree; ++j) {
            int rest = degree - 6 * k - 4 * j;
            int i = rest / 2;
            Monomial m;
            m.even = {i, j, k};
            m.degree = degree;
            out.push_back(std::move(m));
        }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return monomial_less(b, a); });
    return out;
}

QuotientPresentation::QuotientPresentation(int genus, RelationTriple triple, GradingMode mode)
    : genus_(genus), triple_(std::move(triple)), mode_(mode),
      bound_(default_working_degree_bound(genus)) {
    require(genus >= 1, "quotient presentations need genus >= 1");
    validate_triple(triple_);
    if (mode_ == GradingMode::Homogeneous)
        for (int i = 0; i < 3; ++i)
            require(triple_.r[i].is_homogeneous(),
                    "homogeneous mode needs homogeneous relations");
    // basis: all monomials with exponent sum < genus, ascending degree-lex
    for (int total = 0; total < genus_; ++total)
        for (int i = 0; i <= total; ++i)
            for (int j = 0; i + j <= total; ++j) {
                int k = total - i - j;
                Monomial m;
                m.even = {i, j, k};
                m.degree = 2 * i + 4 * j + 6 * k;
                basis_.push_back(std::move(m));
            }
    std::sort(basis_.begin(), basis_.end(), monomial_less);
}

std::shared_ptr<const QuotientPresentation> QuotientPresentation::classical(int genus) {
    return std::shared_ptr<const QuotientPresentation>(
        new QuotientPresentation(genus, classical_relations(genus), GradingMode::Homogeneous));
}

std::shared_ptr<const QuotientPresentation> QuotientPresentation::quantum(
    int genus, bool allow_conjectural) {
    RelationTriple triple = quantum_relations(genus);
    require(!triple.conjectural || allow_conjectural,
            "the quantum presentation is proven only for genus <= 3; pass the conjectural "
            "flag to use the expected presentation beyond");
    return std::shared_ptr<const QuotientPresentation>(
        new QuotientPresentation(genus, std::move(triple), GradingMode::Filtered));
}

std::shared_ptr<const QuotientPresentation> QuotientPresentation::custom(int genus,
                                                                         RelationTriple triple,
                                                                         GradingMode mode) {
    return std::shared_ptr<const QuotientPresentation>(
        new QuotientPresentation(genus, std::move(triple), mode));
}

long long QuotientPresentation::dimension() const { return to_ll(binomial(genus_ + 2, 3)); }

std::vector<Element> QuotientPresentation::basis_elements() const {
    std::vector<Element> out;
    out.reserve(basis_.size());
    for (const auto& m : basis_)
        out.push_back(monomial_element(invariant_ring_signature(), m));
    return out;
}

bool QuotientPresentation::is_basis_monomial(const Monomial& m) const {
    return m.odd == 0 && m.even[0] + m.even[1] + m.even[2] < genus_;
}

const QuotientPresentation::DegreeTable& QuotientPresentation::table_for_degree(
    int degree) const {
    std::scoped_lock lock(cache_mutex_);
    auto it = tables_.find(degree);
    if (it == tables_.end()) {
        require(degree <= bound_,
                "reduction would need degree " + std::to_string(degree) +
                    " above the working bound " + std::to_string(bound_) +
                    "; raise QCOH_MAX_DEGREE / --max-degree");
        it = tables_.emplace(degree, build_table(degree)).first;
    }
    return it->second;
}

QuotientPresentation::DegreeTable QuotientPresentation::build_table(int degree) const {
    auto sig = invariant_ring_signature();
    std::vector<Monomial> cols = invariant_monomials_of_degree(degree); // descending
    std::stable_partition(cols.begin(), cols.end(),
                          [&](const Monomial& m) { return !is_basis_monomial(m); });
    std::map<Monomial, int, MonomialDescending> col_of;
    int pivot_limit = 0;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        col_of.emplace(cols[c], c);
        if (!is_basis_monomial(cols[c]))
            pivot_limit = c + 1;
    }

    struct Row {
        std::vector<Rational> top;
        Element tail;
    };
    std::vector<Row> rows;
    for (int i = 0; i < 3; ++i) {
        int md = degree - triple_.top_degree(i);
        if (md < 0)
            continue;
        for (const auto& m : invariant_monomials_of_degree(md)) {
            Element product = monomial_element(sig, m) * triple_.r[i];
            Row row;
            row.top.assign(cols.size(), Rational(0));
            row.tail = Element::zero(sig);
            for (const auto& [mono, coeff] : product.terms()) {
                if (mono.degree == degree)
                    row.top[col_of.at(mono)] = coeff;
                else
                    row.tail += monomial_element(sig, mono, coeff);
            }
            rows.push_back(std::move(row));
        }
    }

    // full reduction over the non-basis columns, in degree-lex order
    std::vector<int> pivot_row_of_col(pivot_limit, -1);
    std::size_t next_row = 0;
    for (int col = 0; col < pivot_limit; ++col) {
        std::size_t found = next_row;
        while (found < rows.size() && rows[found].top[col] == 0)
            ++found;
        if (found == rows.size())
            continue;
        std::swap(rows[next_row], rows[found]);
        Row& pivot = rows[next_row];
        Rational inv = Rational(1) / pivot.top[col];
        for (auto& v : pivot.top)
            v *= inv;
        pivot.tail = inv * pivot.tail;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r].top[col] == 0)
                continue;
            Rational factor = rows[r].top[col];
            for (std::size_t c = col; c < rows[r].top.size(); ++c)
                rows[r].top[c] -= factor * pivot.top[c];
            rows[r].tail -= factor * pivot.tail;
        }
        pivot_row_of_col[col] = static_cast<int>(next_row);
        ++next_row;
    }

    DegreeTable table;
    for (int col = 0; col < pivot_limit; ++col) {
        if (is_basis_monomial(cols[col]))
            continue;
        ensure(pivot_row_of_col[col] >= 0,
               "reduction table incomplete at degree " + std::to_string(degree) +
                   ": a non-basis monomial has no relation rewrite");
        const Row& row = rows[pivot_row_of_col[col]];
        Rewrite rw;
        rw.top_basis_part = Element::zero(sig);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (static_cast<int>(c) == col || row.top[c] == 0)
                continue;
            ensure(is_basis_monomial(cols[c]),
                   "reduced row still touches a non-basis monomial");
            rw.top_basis_part += monomial_element(sig, cols[c], -row.top[c]);
        }
        rw.lower_part = -row.tail;
        table.rewrites.emplace(cols[col], std::move(rw));
    }
    return table;
}

Element QuotientPresentation::normal_form(const Element& x) const {
    if (x.is_zero())
        return x;
    require(same_signature(x.signature(), invariant_ring_signature()),
            "normal forms are defined for elements of the three-generator ring");
    auto sig = invariant_ring_signature();
    Element out = Element::zero(sig);
    Element work = x;
    while (!work.is_zero()) {
        int degree = work.max_degree();
        Element slice = work.graded_component(degree);
        work -= slice;
        const DegreeTable* table = nullptr;
        for (const auto& [m, c] : slice.terms()) {
            if (is_basis_monomial(m)) {
                out += monomial_element(sig, m, c);
                continue;
            }
            if (!table)
                table = &table_for_degree(degree);
            const auto& rw = table->rewrites.at(m);
            out += c * rw.top_basis_part;
            work += c * rw.lower_part;
        }
    }
    return out;
}

std::vector<long long> poincare_polynomial_invariant(int genus) {
    require(genus >= 1, "genus must be at least 1");
    std::vector<long long> dims(std::max(1, 6 * genus - 6 + 1), 0);
    auto pres = QuotientPresentation::classical(genus);
    for (const auto& m : pres->basis())
        dims[m.degree] += 1;
    return dims;
}

long long primitive_dimension_formula(int genus, int k) {
    return to_ll(binomial(2 * genus, k) - binomial(2 * genus, k - 2));
}

SpDecomposition sp_decomposition(int genus) {
    require(genus >= 1, "genus must be at least 1");
    SpDecomposition out;
    out.genus = genus;
    for (int k = 0; k <= genus; ++k) {
        SpSummand s;
        s.k = k;
        s.primitive_dim = primitive_dimension_formula(genus, k);
        s.quotient_dim = to_ll(binomial(genus - k + 2, 3));
        s.dim = s.primitive_dim * s.quotient_dim;
        out.total += s.dim;
        out.summands.push_back(s);
    }
    return out;
}

long long primitive_dimension_by_kernel(int genus, int k) {
    require(genus >= 1 && k >= 0 && k <= genus, "need 1 <= genus and 0 <= k <= genus");
    auto sig = psi_exterior_signature(genus);
    Element power = gamma_cubic_class(genus).pow(genus - k + 1);

    // columns: exterior monomials of word length k + 2(g-k+1)
    int target_size = k + 2 * (genus - k + 1);
    std::map<std::uint64_t, int> col_of;
    std::vector<std::vector<Rational>> rows;
    int n = 2 * genus;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        Monomial m;
        m.even = {};
        m.odd = mask;
        m.degree = 3 * k;
        Element image = power * Element::from_canonical_term(sig, std::move(m), Rational(1));
        std::vector<std::pair<int, Rational>> sparse;
        for (const auto& [mono, coeff] : image.terms()) {
            auto [it, fresh] = col_of.emplace(mono.odd, static_cast<int>(col_of.size()));
            sparse.emplace_back(it->second, coeff);
            ensure(std::popcount(mono.odd) == target_size, "unexpected image word length");
        }
        std::vector<Rational> row(col_of.size(), Rational(0));
        for (auto& [c, v] : sparse)
            row[c] = v;
        rows.push_back(std::move(row));
    }
    // pad rows to the final column count and row-reduce for the rank
    std::size_t cols = col_of.size();
    for (auto& row : rows)
        row.resize(cols, Rational(0));
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t found = rank;
        while (found < rows.size() && rows[found][col] == 0)
            ++found;
        if (found == rows.size())
            continue;
        std::swap(rows[rank], rows[found]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t c = col; c < cols; ++c)
            rows[rank][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0)
                continue;
            Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return to_ll(binomial(2 * genus, k)) - rank;
}

} // namespace qcoh
