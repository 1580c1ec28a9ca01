#include <doctest.h>

#include "test_support.hpp"

using namespace pafp;

namespace {

TwoSatFormula random_formula(Rng& rng, int max_vars, int max_clauses) {
    TwoSatFormula f;
    f.var_count = rng.range(1, max_vars);
    int clauses = rng.range(0, max_clauses);
    for (int i = 0; i < clauses; ++i) {
        Lit a{rng.range(0, f.var_count - 1), rng.chance(0.5)};
        Lit b{rng.range(0, f.var_count - 1), rng.chance(0.5)};
        if (rng.chance(0.15))
            f.add_unit(a);
        else
            f.add_clause(a, b);
    }
    return f;
}

}  // namespace

TEST_CASE("unit propagation") {
    TwoSatFormula f;
    int x1 = f.add_var();
    int x2 = f.add_var();
    f.add_unit(pos(x1));
    f.add_clause(neg(x1), pos(x2));
    auto model = solve(f);
    REQUIRE(model.has_value());
    CHECK((*model)[x1]);
    CHECK((*model)[x2]);
}

TEST_CASE("contradicting units are unsatisfiable") {
    TwoSatFormula f;
    int x1 = f.add_var();
    f.add_unit(pos(x1));
    f.add_unit(neg(x1));
    CHECK_FALSE(solve(f).has_value());
}

TEST_CASE("classic implication chain") {
    // (a | b) & (~a | b) & (a | ~b) forces a, b true
    TwoSatFormula f;
    int a = f.add_var();
    int b = f.add_var();
    f.add_clause(pos(a), pos(b));
    f.add_clause(neg(a), pos(b));
    f.add_clause(pos(a), neg(b));
    auto model = solve(f);
    REQUIRE(model.has_value());
    CHECK((*model)[a]);
    CHECK((*model)[b]);

    f.add_clause(neg(a), neg(b));  // now all four sign combinations
    CHECK_FALSE(solve(f).has_value());
}

TEST_CASE("empty formula is satisfiable") {
    TwoSatFormula f;
    f.var_count = 3;
    CHECK(solve(f).has_value());
}

TEST_CASE("agreement with truth tables and model validity") {
    Rng rng(40009);
    int sat_seen = 0, unsat_seen = 0;
    for (int iter = 0; iter < 1500; ++iter) {
        TwoSatFormula f = random_formula(rng, 12, 24);
        bool want = testsup::truth_table_sat(f);
        auto model = solve(f);
        CHECK(model.has_value() == want);
        if (model) {
            CHECK(testsup::model_satisfies(f, *model));
            ++sat_seen;
        } else {
            ++unsat_seen;
        }
    }
    CHECK(sat_seen > 100);
    CHECK(unsat_seen > 100);
}

TEST_CASE("builder simplifies constants away") {
    FormulaBuilder b;
    int x = b.add_var();

    b.require_or(Term::constant(true), Term::literal(pos(x)));  // dropped
    CHECK(b.formula().clauses.empty());

    b.require_or(Term::constant(false), Term::literal(pos(x)));  // unit x
    CHECK(b.formula().clauses.size() == 1);
    CHECK(b.formula().clauses.back() == std::pair{pos(x), pos(x)});

    CHECK_FALSE(b.contradiction());
    b.require_or(Term::constant(false), Term::constant(false));
    CHECK(b.contradiction());

    CHECK(b.clauses_added() == 3);  // every request counts, pre-simplification
}

TEST_CASE("builder negation of terms") {
    CHECK((~Term::constant(true)).constant_value() == false);
    CHECK((~Term::constant(false)).constant_value() == true);
    Term l = Term::literal(pos(4));
    CHECK((~l).lit() == neg(4));
    CHECK_FALSE(l.is_constant());
}

TEST_CASE("builder require records a unit") {
    FormulaBuilder b;
    int x = b.add_var();
    b.require(Term::literal(neg(x)));
    auto model = solve(b.formula());
    REQUIRE(model.has_value());
    CHECK_FALSE((*model)[x]);
}
