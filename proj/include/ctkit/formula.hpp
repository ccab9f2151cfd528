#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace ctkit {

enum class Flavor { Standard3Sat, OneInThreePositive3Bounded, NaePositive };

inline const char* flavor_token(Flavor f) {
    switch (f) {
    case Flavor::Standard3Sat: return "cnf";
    case Flavor::OneInThreePositive3Bounded: return "1in3";
    case Flavor::NaePositive: return "nae";
    }
    return "?";
}

struct Literal {
    int var = 0; // 0-based
    bool positive = true;
    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Formula {
    Flavor flavor = Flavor::Standard3Sat;
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    std::string var_name(int v) const { return "x" + std::to_string(v + 1); }
    std::string clause_name(int c) const { return "c" + std::to_string(c + 1); }

    // Clauses (by index) containing variable v, in increasing order.
    std::vector<int> occurrences(int v) const {
        std::vector<int> out;
        for (int c = 0; c < static_cast<int>(clauses.size()); ++c)
            for (const auto& l : clauses[c])
                if (l.var == v) {
                    out.push_back(c);
                    break;
                }
        return out;
    }
};

using Assignment = std::vector<bool>;

// Standard3Sat: 1-3 literals over distinct variables. 1-in-3: positive, 3 distinct
// variables, every variable in exactly 3 clauses. NAE: positive, 3 distinct variables.
inline void validate(const Formula& f) {
    if (f.num_vars < 1) throw Error(Errc::InvalidFormula, "no variables");
    if (f.clauses.empty()) throw Error(Errc::InvalidFormula, "no clauses");
    std::vector<int> occ(f.num_vars, 0);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& cl = f.clauses[c];
        const std::string where = "clause " + std::to_string(c + 1);
        if (cl.empty() || cl.size() > 3) throw Error(Errc::InvalidFormula, where + " must have 1 to 3 literals");
        std::set<int> vars;
        for (const auto& l : cl) {
            if (l.var < 0 || l.var >= f.num_vars) throw Error(Errc::InvalidFormula, where + ": variable out of range");
            if (!vars.insert(l.var).second) throw Error(Errc::InvalidFormula, where + ": repeated variable");
            if (f.flavor != Flavor::Standard3Sat && !l.positive)
                throw Error(Errc::InvalidFormula, where + ": negative literal in a positive flavor");
            ++occ[l.var];
        }
        if (f.flavor != Flavor::Standard3Sat && cl.size() != 3)
            throw Error(Errc::InvalidFormula, where + " must have exactly 3 literals");
    }
    if (f.flavor == Flavor::OneInThreePositive3Bounded) {
        for (int v = 0; v < f.num_vars; ++v)
            if (occ[v] != 3) throw Error(Errc::InvalidFormula, f.var_name(v) + " must occur in exactly 3 clauses");
    }
}

inline bool satisfies(const Formula& f, const Assignment& a) {
    for (const auto& cl : f.clauses) {
        int true_lits = 0;
        for (const auto& l : cl)
            if (a[l.var] == l.positive) ++true_lits;
        switch (f.flavor) {
        case Flavor::Standard3Sat:
            if (true_lits == 0) return false;
            break;
        case Flavor::OneInThreePositive3Bounded:
            if (true_lits != 1) return false;
            break;
        case Flavor::NaePositive:
            if (true_lits == 0 || true_lits == static_cast<int>(cl.size())) return false;
            break;
        }
    }
    return true;
}

// First satisfying assignment in binary counting order (variable i is bit i).
inline std::optional<Assignment> sat_bruteforce(const Formula& f) {
    if (f.num_vars > 24) throw Error(Errc::TooManyVariables, std::to_string(f.num_vars) + " variables");
    Assignment a(f.num_vars);
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        for (int v = 0; v < f.num_vars; ++v) a[v] = (mask >> v) & 1u;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

inline std::vector<Assignment> all_satisfying(const Formula& f) {
    if (f.num_vars > 24) throw Error(Errc::TooManyVariables, std::to_string(f.num_vars) + " variables");
    std::vector<Assignment> out;
    Assignment a(f.num_vars);
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        for (int v = 0; v < f.num_vars; ++v) a[v] = (mask >> v) & 1u;
        if (satisfies(f, a)) out.push_back(a);
    }
    return out;
}

// "p <cnf|1in3|nae> <vars> <clauses>" then clauses of signed 1-based ids ending in 0.
inline Formula parse_formula(std::istream& in) {
    Formula f;
    std::string line;
    bool header = false;
    long declared = -1;
    std::vector<Literal> cur;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (header) throw Error(Errc::Parse, "second header");
            std::string fl;
            long nv, nc;
            if (!(ls >> fl >> nv >> nc) || nv < 1 || nc < 1) throw Error(Errc::Parse, "bad header");
            if (fl == "cnf" || fl == "3sat") f.flavor = Flavor::Standard3Sat;
            else if (fl == "1in3") f.flavor = Flavor::OneInThreePositive3Bounded;
            else if (fl == "nae") f.flavor = Flavor::NaePositive;
            else throw Error(Errc::Parse, "unknown flavor '" + fl + "'");
            f.num_vars = static_cast<int>(nv);
            declared = nc;
            header = true;
            continue;
        }
        if (!header) throw Error(Errc::Parse, "clause before header");
        do {
            long id;
            try {
                std::size_t used = 0;
                id = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(Errc::Parse, "bad literal '" + tok + "'");
            }
            if (id == 0) {
                f.clauses.push_back(cur);
                cur.clear();
                continue;
            }
            if (std::labs(id) > f.num_vars) throw Error(Errc::Parse, "literal " + tok + " out of range");
            cur.push_back({static_cast<int>(std::labs(id)) - 1, id > 0});
        } while (ls >> tok);
    }
    if (!header) throw Error(Errc::Parse, "missing header");
    if (!cur.empty()) throw Error(Errc::Parse, "unterminated clause");
    if (static_cast<long>(f.clauses.size()) != declared)
        throw Error(Errc::Parse, "header declares " + std::to_string(declared) + " clauses");
    validate(f);
    return f;
}

inline Formula parse_formula(const std::string& text) {
    std::istringstream in(text);
    return parse_formula(in);
}

inline std::string serialize(const Formula& f) {
    std::ostringstream os;
    os << "p " << flavor_token(f.flavor) << ' ' << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (const auto& l : cl) os << (l.positive ? "" : "-") << l.var + 1 << ' ';
        os << "0\n";
    }
    return os.str();
}

// Random standard formula; clause lengths uniform in [min_len, max_len], distinct variables.
inline Formula random_standard(std::mt19937_64& rng, int vars, int clauses, int min_len = 1, int max_len = 3) {
    Formula f;
    f.flavor = Flavor::Standard3Sat;
    f.num_vars = vars;
    std::uniform_int_distribution<int> len(min_len, std::min(max_len, vars));
    std::bernoulli_distribution sign(0.5);
    std::vector<int> pool(vars);
    for (int c = 0; c < clauses; ++c) {
        for (int v = 0; v < vars; ++v) pool[v] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Literal> cl;
        const int k = len(rng);
        for (int i = 0; i < k; ++i) cl.push_back({pool[i], sign(rng)});
        std::sort(cl.begin(), cl.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });
        f.clauses.push_back(cl);
    }
    validate(f);
    return f;
}

// Random positive NAE formula with 3 distinct variables per clause.
inline Formula random_nae(std::mt19937_64& rng, int vars, int clauses) {
    if (vars < 3) throw Error(Errc::InvalidFormula, "NAE needs at least 3 variables");
    Formula f;
    f.flavor = Flavor::NaePositive;
    f.num_vars = vars;
    std::vector<int> pool(vars);
    for (int c = 0; c < clauses; ++c) {
        for (int v = 0; v < vars; ++v) pool[v] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> pick(pool.begin(), pool.begin() + 3);
        std::sort(pick.begin(), pick.end());
        f.clauses.push_back({{pick[0], true}, {pick[1], true}, {pick[2], true}});
    }
    validate(f);
    return f;
}

// Random 3-regular 1-in-3 instance on n variables (n clauses), by pairing
// variable copies until every clause has 3 distinct variables.
inline Formula random_one_in_three(std::mt19937_64& rng, int n, bool distinct_clauses = false) {
    if (n < 3) throw Error(Errc::InvalidFormula, "1-in-3 needs at least 3 variables");
    std::vector<int> slots;
    for (int v = 0; v < n; ++v)
        for (int r = 0; r < 3; ++r) slots.push_back(v);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(slots.begin(), slots.end(), rng);
        Formula f;
        f.flavor = Flavor::OneInThreePositive3Bounded;
        f.num_vars = n;
        bool ok = true;
        std::set<std::vector<int>> seen;
        for (int c = 0; c < n && ok; ++c) {
            std::vector<int> vs{slots[3 * c], slots[3 * c + 1], slots[3 * c + 2]};
            std::sort(vs.begin(), vs.end());
            ok = vs[0] != vs[1] && vs[1] != vs[2];
            if (ok && distinct_clauses) ok = seen.insert(vs).second;
            if (ok) f.clauses.push_back({{vs[0], true}, {vs[1], true}, {vs[2], true}});
        }
        if (!ok) continue;
        std::sort(f.clauses.begin(), f.clauses.end(), [](const auto& a, const auto& b) {
            return std::make_tuple(a[0].var, a[1].var, a[2].var) < std::make_tuple(b[0].var, b[1].var, b[2].var);
        });
        validate(f);
        return f;
    }
    throw Error(Errc::GiveUp, "could not sample a 1-in-3 instance");
}

} // namespace ctkit
