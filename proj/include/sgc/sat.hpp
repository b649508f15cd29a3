#pragma once

// CNF formulas with two satisfaction thresholds (at least one true literal
// per clause, or at least two), the folklore width lifts between them, a
// tiny exhaustive solver, and DIMACS text io. Literals are signed 1-based
// variable indices, DIMACS style.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sgc {

enum class SatMode { AtLeast1, AtLeast2 };

using Assignment = std::vector<bool>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    SatMode mode = SatMode::AtLeast1;

    CnfFormula() = default;
    CnfFormula(int vars, std::vector<std::vector<int>> cls, SatMode m)
        : num_vars(vars), clauses(std::move(cls)), mode(m) {
        validate();
    }

    void validate() const {
        if (num_vars < 1) throw std::invalid_argument("cnf: need at least one variable");
        std::size_t width = clauses.empty() ? 0 : clauses.front().size();
        for (const auto& clause : clauses) {
            std::vector<bool> seen(static_cast<std::size_t>(num_vars) + 1, false);
            for (int lit : clause) {
                int v = std::abs(lit);
                if (lit == 0 || v > num_vars)
                    throw std::invalid_argument("cnf: literal out of range");
                if (seen[v])
                    throw std::invalid_argument("cnf: clause repeats variable " + std::to_string(v));
                seen[v] = true;
            }
            if (mode == SatMode::AtLeast2 && clause.size() != width)
                throw std::invalid_argument("cnf: threshold-2 formulas need uniform clause width");
        }
        if (mode == SatMode::AtLeast2 && !clauses.empty() && width < 4)
            throw std::invalid_argument("cnf: threshold-2 formulas need width at least 4");
    }

    int threshold() const { return mode == SatMode::AtLeast2 ? 2 : 1; }
};

inline bool literal_true(int lit, const Assignment& a) {
    int v = std::abs(lit);
    return lit > 0 ? a[v - 1] : !a[v - 1];
}

// True iff every clause has at least `threshold` true literals.
inline bool evaluate(const CnfFormula& phi, const Assignment& a) {
    if (static_cast<int>(a.size()) != phi.num_vars)
        throw std::invalid_argument("evaluate: assignment arity mismatch");
    for (const auto& clause : phi.clauses) {
        int trues = 0;
        for (int lit : clause)
            if (literal_true(lit, a)) ++trues;
        if (trues < phi.threshold()) return false;
    }
    return true;
}

// Appends one shared fresh variable positively to every width-3 clause.
// The input is satisfiable iff the output has an assignment making at
// least two literals per clause true.
inline CnfFormula lift_3sat_to_4satge2(const CnfFormula& phi) {
    if (phi.mode != SatMode::AtLeast1)
        throw std::invalid_argument("lift: input must use the single-literal threshold");
    for (const auto& clause : phi.clauses)
        if (clause.size() != 3)
            throw std::invalid_argument("lift: input clauses must have width 3");
    int fresh = phi.num_vars + 1;
    std::vector<std::vector<int>> out;
    out.reserve(phi.clauses.size());
    for (const auto& clause : phi.clauses) {
        std::vector<int> c = clause;
        c.push_back(fresh);
        out.push_back(std::move(c));
    }
    return CnfFormula(fresh, std::move(out), SatMode::AtLeast2);
}

// Expands each width-4 clause into 2^(k-4) width-k clauses over k-4 fresh
// variables private to that clause, covering every sign pattern of the
// fresh variables. Fresh indices are consecutive, allocated in clause order.
inline CnfFormula lift_4satge2_to_ksatge2(const CnfFormula& phi, int k) {
    if (phi.mode != SatMode::AtLeast2)
        throw std::invalid_argument("lift: input must use the two-literal threshold");
    if (k < 5) throw std::invalid_argument("lift: target width must be at least 5");
    for (const auto& clause : phi.clauses)
        if (clause.size() != 4)
            throw std::invalid_argument("lift: input clauses must have width 4");

    const int extra = k - 4;
    int next = phi.num_vars + 1;
    std::vector<std::vector<int>> out;
    out.reserve(phi.clauses.size() << extra);
    for (const auto& clause : phi.clauses) {
        int base = next;
        next += extra;
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << extra); ++pattern) {
            std::vector<int> c = clause;
            for (int i = 0; i < extra; ++i)
                c.push_back(((pattern >> i) & 1) ? (base + i) : -(base + i));
            out.push_back(std::move(c));
        }
    }
    return CnfFormula(next - 1, std::move(out), SatMode::AtLeast2);
}

// Exhaustive search returning the lexicographically first satisfying
// assignment, ordering tuples (v1, ..., vn) with false before true.
inline std::optional<Assignment> brute_sat(const CnfFormula& phi) {
    const int n = phi.num_vars;
    if (n > 24) throw BudgetError("brute_sat: more than 24 variables");
    Assignment a(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i) a[i] = (mask >> (n - 1 - i)) & 1;
        if (evaluate(phi, a)) return a;
    }
    return std::nullopt;
}

// DIMACS CNF reader. Comments start with 'c'; the 'p cnf <vars> <clauses>'
// header precedes whitespace-separated 0-terminated clauses. Files always
// parse to the single-literal threshold; callers pick the other mode
// explicitly.
inline CnfFormula read_dimacs(std::istream& in) {
    std::string line;
    int vars = -1;
    long long expected = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') continue;
        if (line[start] == 'p') {
            if (vars != -1) throw std::invalid_argument("dimacs: repeated header");
            std::istringstream hs(line.substr(start));
            std::string p, cnf;
            if (!(hs >> p >> cnf >> vars >> expected) || cnf != "cnf" || vars < 1 || expected < 0)
                throw std::invalid_argument("dimacs: malformed problem line");
            continue;
        }
        if (vars == -1) throw std::invalid_argument("dimacs: clause before problem line");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (!ls.eof()) throw std::invalid_argument("dimacs: non-integer token");
    }
    if (!current.empty()) throw std::invalid_argument("dimacs: unterminated clause");
    if (vars == -1) throw std::invalid_argument("dimacs: missing problem line");
    if (static_cast<long long>(clauses.size()) != expected)
        throw std::invalid_argument("dimacs: clause count mismatch");
    return CnfFormula(vars, std::move(clauses), SatMode::AtLeast1);
}

inline CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("dimacs: cannot open " + path);
    return read_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const CnfFormula& phi) {
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& clause : phi.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

inline std::string dimacs_to_string(const CnfFormula& phi) {
    std::ostringstream out;
    write_dimacs(out, phi);
    return out.str();
}

inline CnfFormula dimacs_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

} // namespace sgc
