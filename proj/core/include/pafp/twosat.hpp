#pragma once

#include <optional>
#include <vector>

namespace pafp {

struct Lit {
    int var = 0;  // 0-based variable index
    bool negated = false;

    Lit operator~() const { return {var, !negated}; }
    friend bool operator==(const Lit&, const Lit&) = default;
};

inline Lit pos(int var) { return {var, false}; }
inline Lit neg(int var) { return {var, true}; }

// Conjunction of two-literal clauses. Unit clauses are stored as (l, l).
struct TwoSatFormula {
    int var_count = 0;
    std::vector<std::pair<Lit, Lit>> clauses;

    int add_var() { return var_count++; }
    void add_clause(Lit a, Lit b) { clauses.emplace_back(a, b); }
    void add_unit(Lit a) { add_clause(a, a); }
};

// Implication-graph 2-SAT: returns a satisfying assignment or nullopt.
// Linear in clauses via strongly connected components. Every returned model
// is re-checked clause by clause; a failure there is an internal bug and
// throws std::logic_error.
std::optional<std::vector<bool>> solve(const TwoSatFormula& f);

// A literal or a Boolean constant, for formula builders whose "variables"
// can be forced by structure (single-vertex layers and the like).
class Term {
public:
    static Term constant(bool value) { return Term(value ? Kind::True : Kind::False, {}); }
    static Term literal(Lit l) { return Term(Kind::Literal, l); }

    bool is_constant() const { return kind_ != Kind::Literal; }
    bool constant_value() const { return kind_ == Kind::True; }
    Lit lit() const { return lit_; }

    Term operator~() const {
        if (kind_ == Kind::Literal) return literal(~lit_);
        return constant(kind_ == Kind::False);
    }

private:
    enum class Kind { False, True, Literal };
    Term(Kind k, Lit l) : kind_(k), lit_(l) {}
    Kind kind_;
    Lit lit_;
};

// Accumulates clauses over Terms. Constants are simplified away before the
// solver ever sees them: clauses containing a true constant are dropped,
// false constants are deleted from their clause, and an all-false clause
// flags an immediate contradiction. clauses_added() counts every requested
// clause, pre-simplification.
class FormulaBuilder {
public:
    int add_var() { return formula_.add_var(); }

    void require_or(Term a, Term b);
    void require(Term a) { require_or(a, a); }

    bool contradiction() const { return contradiction_; }
    long long clauses_added() const { return added_; }

    const TwoSatFormula& formula() const { return formula_; }

private:
    TwoSatFormula formula_;
    bool contradiction_ = false;
    long long added_ = 0;
};

}  // namespace pafp
