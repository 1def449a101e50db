#ifndef MVCHROMA_NAE_HPP
#define MVCHROMA_NAE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvchroma/error.hpp"

namespace mvchroma {

// x_var (negated = false) or its complement; variables are 1-based.
struct Literal {
    std::uint32_t var = 1;
    bool negated = false;

    static Literal from_signed(long long value) {
        return {static_cast<std::uint32_t>(value < 0 ? -value : value), value < 0};
    }
    long long to_signed() const { return negated ? -static_cast<long long>(var) : static_cast<long long>(var); }
    Literal complement() const { return {var, !negated}; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct NaeFormula {
    std::uint32_t num_vars = 0;
    std::vector<Clause> clauses;

    // Every clause mentions three distinct variables.
    bool is_normalized() const {
        return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) {
            return c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var;
        });
    }

    friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

// values[x - 1] is the truth value of x.
struct NaeAssignment {
    std::vector<bool> values;

    bool value_of(Literal l) const { return values.at(l.var - 1) != l.negated; }
    friend bool operator==(const NaeAssignment&, const NaeAssignment&) = default;
};

// Format: "p nae3 <q> <m>" then m lines "<l1> <l2> <l3> 0" with signed
// 1-based variable indices; "c" lines are comments.
inline NaeFormula parse_nae_formula(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long declared = 0;
    NaeFormula f;
    auto fail = [&](ErrorCode code, const std::string& what) {
        throw Error(code, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c') continue;
        std::istringstream tokens(line);
        if (line[first] == 'p') {
            std::string tag, kind;
            long long q = -1, m = -1;
            if (have_header) fail(ErrorCode::ParseError, "duplicate header");
            if (!(tokens >> tag >> kind >> q >> m) || kind != "nae3" || q < 0 || m < 0) {
                fail(ErrorCode::ParseError, "expected 'p nae3 <q> <m>'");
            }
            std::string extra;
            if (tokens >> extra) fail(ErrorCode::ParseError, "unexpected trailing token '" + extra + "'");
            f.num_vars = static_cast<std::uint32_t>(q);
            declared = m;
            have_header = true;
            continue;
        }
        if (!have_header) fail(ErrorCode::ParseError, "clause before header");
        std::vector<long long> lits;
        std::string token;
        bool terminated = false;
        while (tokens >> token) {
            if (terminated) fail(ErrorCode::ParseError, "token after clause terminator 0");
            long long value = 0;
            std::size_t used = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "invalid literal '" + token + "'");
            }
            if (used != token.size()) fail(ErrorCode::ParseError, "invalid literal '" + token + "'");
            if (value == 0) {
                terminated = true;
                continue;
            }
            lits.push_back(value);
        }
        if (!terminated) fail(ErrorCode::ParseError, "clause not terminated by 0");
        if (lits.size() != 3) {
            fail(ErrorCode::ClauseArityError, "clause has " + std::to_string(lits.size()) + " literals, expected 3");
        }
        Clause clause;
        for (std::size_t k = 0; k < 3; ++k) {
            long long mag = lits[k] < 0 ? -lits[k] : lits[k];
            if (mag > static_cast<long long>(f.num_vars)) {
                fail(ErrorCode::VariableOutOfRange,
                     "variable " + std::to_string(mag) + " outside 1.." + std::to_string(f.num_vars));
            }
            clause[k] = Literal::from_signed(lits[k]);
        }
        f.clauses.push_back(clause);
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p nae3' header");
    if (static_cast<long long>(f.clauses.size()) != declared) {
        throw Error(ErrorCode::ParseError, "header declares " + std::to_string(declared) + " clauses, found " +
                                               std::to_string(f.clauses.size()));
    }
    return f;
}

inline NaeFormula parse_nae_formula(const std::string& text) {
    std::istringstream in(text);
    return parse_nae_formula(in);
}

inline void write_nae_formula(std::ostream& out, const NaeFormula& f) {
    out << "p nae3 " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        out << c[0].to_signed() << ' ' << c[1].to_signed() << ' ' << c[2].to_signed() << " 0\n";
    }
}

struct NormalizeOutcome {
    bool trivially_unsat = false;
    NaeFormula formula;
};

// Rewrites a formula so that every clause mentions three distinct variables:
//  - {l,l,l} makes the whole instance a No instance;
//  - a clause holding some x and its complement is always NAE-satisfied and is dropped;
//  - {l1,l1,l2} becomes {l1,l2,a} and {l1,l2,~a} with a fresh variable a.
// Clauses are processed in input order and fresh variables are numbered in
// that order, so the output is canonical.
inline NormalizeOutcome normalize(const NaeFormula& f) {
    NormalizeOutcome out;
    for (const Clause& c : f.clauses) {
        if (c[0] == c[1] && c[1] == c[2]) {
            out.trivially_unsat = true;
            out.formula = {};
            return out;
        }
    }
    out.formula.num_vars = f.num_vars;
    for (const Clause& c : f.clauses) {
        bool mixed = false;
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a + 1; b < 3; ++b) mixed |= c[a] == c[b].complement();
        }
        if (mixed) continue;
        if (c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var) {
            out.formula.clauses.push_back(c);
            continue;
        }
        // Exactly two distinct literals remain, one of them repeated.
        Literal l1 = c[0];
        Literal l2 = (c[1] == l1) ? c[2] : c[1];
        Literal fresh{++out.formula.num_vars, false};
        out.formula.clauses.push_back({l1, l2, fresh});
        out.formula.clauses.push_back({l1, l2, fresh.complement()});
    }
    return out;
}

inline bool nae_clause_satisfied(const Clause& c, const NaeAssignment& a) {
    const bool first = a.value_of(c[0]);
    return a.value_of(c[1]) != first || a.value_of(c[2]) != first;
}

inline bool nae_satisfies(const NaeFormula& f, const NaeAssignment& a) {
    if (a.values.size() != f.num_vars) {
        throw Error(ErrorCode::PartialAssignment, "assignment covers " + std::to_string(a.values.size()) +
                                                      " of " + std::to_string(f.num_vars) + " variables");
    }
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return nae_clause_satisfied(c, a); });
}

inline constexpr std::uint32_t kDefaultNaeVariableCap = 24;

// Scans all 2^q assignments in increasing binary order, x_1 being the most
// significant bit, and returns the first NAE-satisfying one.
inline std::optional<NaeAssignment> nae_satisfiable(const NaeFormula& f,
                                                    std::uint32_t variable_cap = kDefaultNaeVariableCap) {
    const std::uint32_t q = f.num_vars;
    if (q > variable_cap || q > 63) {
        throw Error(ErrorCode::TooManyVariables,
                    std::to_string(q) + " variables exceed the cap of " + std::to_string(variable_cap));
    }
    // Per clause: bit positions and polarity flips of its literals.
    struct Packed {
        std::array<std::uint32_t, 3> shift;
        std::array<std::uint64_t, 3> flip;
    };
    std::vector<Packed> packed;
    packed.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        Packed p{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (c[k].var == 0 || c[k].var > q) {
                throw Error(ErrorCode::VariableOutOfRange, "literal on variable " + std::to_string(c[k].var));
            }
            p.shift[k] = q - c[k].var;
            p.flip[k] = c[k].negated ? 1 : 0;
        }
        packed.push_back(p);
    }
    const std::uint64_t total = std::uint64_t{1} << q;
    for (std::uint64_t m = 0; m < total; ++m) {
        bool ok = true;
        for (const Packed& p : packed) {
            const std::uint64_t a = ((m >> p.shift[0]) & 1) ^ p.flip[0];
            const std::uint64_t b = ((m >> p.shift[1]) & 1) ^ p.flip[1];
            const std::uint64_t c = ((m >> p.shift[2]) & 1) ^ p.flip[2];
            if (a == b && b == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        NaeAssignment out;
        out.values.resize(q);
        for (std::uint32_t x = 1; x <= q; ++x) out.values[x - 1] = ((m >> (q - x)) & 1) != 0;
        return out;
    }
    return std::nullopt;
}

}  // namespace mvchroma

#endif
