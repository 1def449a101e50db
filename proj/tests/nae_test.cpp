#include <gtest/gtest.h>

#include <random>

#include "mvchroma/nae.hpp"
#include "oracles.hpp"

using namespace mvchroma;

namespace {

Clause clause(long long a, long long b, long long c) {
    return {Literal::from_signed(a), Literal::from_signed(b), Literal::from_signed(c)};
}

NaeFormula formula(std::uint32_t q, std::vector<Clause> clauses) {
    NaeFormula f;
    f.num_vars = q;
    f.clauses = std::move(clauses);
    return f;
}

}  // namespace

TEST(Nae, ParseAndWrite) {
    const auto f = parse_nae_formula("c sample\np nae3 3 2\n1 -2 3 0\n-1 2 3 0\n");
    ASSERT_EQ(f.num_vars, 3u);
    ASSERT_EQ(f.clauses.size(), 2u);
    EXPECT_EQ(f.clauses[0][1].to_signed(), -2);
    std::ostringstream out;
    write_nae_formula(out, f);
    EXPECT_EQ(out.str(), "p nae3 3 2\n1 -2 3 0\n-1 2 3 0\n");
}

TEST(Nae, ParseErrors) {
    auto code = [](const std::string& text) {
        try {
            parse_nae_formula(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidParams;
    };
    EXPECT_EQ(code("p nae3 3 1\n1 2 0\n"), ErrorCode::ClauseArityError);
    EXPECT_EQ(code("p nae3 3 1\n1 2 3 4 0\n"), ErrorCode::ClauseArityError);
    EXPECT_EQ(code("p nae3 3 1\n1 2 5 0\n"), ErrorCode::VariableOutOfRange);
    EXPECT_EQ(code("1 2 3 0\n"), ErrorCode::ParseError);
}

TEST(Nae, FirstSatisfyingAssignmentInMsbOrder) {
    // Assignments are scanned with x_1 as the most significant bit, so
    // FFF, FFT is the first hit for a single clause.
    const auto w = nae_satisfiable(formula(3, {clause(1, 2, 3)}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->values, (std::vector<bool>{false, false, true}));
}

TEST(Nae, FourClauseInstanceIsUnsatisfiable) {
    const auto f = formula(3, {clause(1, 2, 3), clause(-1, 2, 3), clause(1, -2, 3), clause(1, 2, -3)});
    EXPECT_FALSE(nae_satisfiable(f));
    EXPECT_FALSE(oracle::nae_satisfiable(f));
}

TEST(Nae, AgreesWithOracleOnRandomFormulas) {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        const std::uint32_t q = 3 + round % 5;
        std::uniform_int_distribution<long long> var(1, q);
        std::bernoulli_distribution neg(0.5);
        std::vector<Clause> clauses;
        for (int c = 0; c < 1 + round % 9; ++c) {
            Clause cl;
            for (auto& lit : cl) lit = Literal::from_signed(neg(rng) ? -var(rng) : var(rng));
            clauses.push_back(cl);
        }
        const auto f = formula(q, clauses);
        const auto w = nae_satisfiable(f);
        ASSERT_EQ(w.has_value(), oracle::nae_satisfiable(f));
        if (w) {
            EXPECT_TRUE(nae_satisfies(f, *w));
        }
    }
}

TEST(Nae, NormalizationPreservesSatisfiability) {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 300; ++round) {
        const std::uint32_t q = 2 + round % 3;
        std::uniform_int_distribution<long long> var(1, q);
        std::bernoulli_distribution neg(0.5);
        std::vector<Clause> clauses;
        for (int c = 0; c < 1 + round % 5; ++c) {
            Clause cl;
            for (auto& lit : cl) lit = Literal::from_signed(neg(rng) ? -var(rng) : var(rng));
            clauses.push_back(cl);
        }
        const auto f = formula(q, clauses);
        const auto norm = normalize(f);
        if (norm.trivially_unsat) {
            EXPECT_FALSE(oracle::nae_satisfiable(f));
            continue;
        }
        EXPECT_TRUE(norm.formula.is_normalized());
        ASSERT_EQ(oracle::nae_satisfiable(norm.formula), oracle::nae_satisfiable(f)) << "round " << round;
    }
}

TEST(Nae, NormalizationRules) {
    EXPECT_TRUE(normalize(formula(2, {clause(1, 2, -1), clause(2, 2, 2)})).trivially_unsat);
    const auto dropped = normalize(formula(2, {clause(1, -1, 2)}));
    EXPECT_FALSE(dropped.trivially_unsat);
    EXPECT_TRUE(dropped.formula.clauses.empty());
    const auto split = normalize(formula(2, {clause(1, 1, -2)}));
    ASSERT_EQ(split.formula.num_vars, 3u);
    ASSERT_EQ(split.formula.clauses.size(), 2u);
    EXPECT_EQ(split.formula.clauses[0][2].to_signed(), 3);
    EXPECT_EQ(split.formula.clauses[1][2].to_signed(), -3);
}

TEST(Nae, VariableCapAndPartialAssignments) {
    const auto f = formula(30, {clause(1, 2, 3)});
    try {
        nae_satisfiable(f);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooManyVariables);
    }
    NaeAssignment partial;
    partial.values = {true, false};
    try {
        nae_satisfies(formula(3, {clause(1, 2, 3)}), partial);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PartialAssignment);
    }
}
