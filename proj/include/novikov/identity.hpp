#pragma once

#include <map>
#include <string>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

// One fully parenthesized nonassociative word. Nodes live in a flat vector;
// a leaf has var >= 1 (variable index), an inner node has left/right child
// indices. root is always the last node.
struct Monomial {
    struct Node {
        int var = 0;  // 0 for inner nodes
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    std::string str() const;
};

bool operator<(const Monomial& a, const Monomial& b);
bool operator==(const Monomial& a, const Monomial& b);

// A multilinear identity: a formal sum of (rational coefficient, monomial),
// understood as "= 0". Commutator/associator sugar is expanded at parse time,
// so the evaluator only ever sees primitive product trees.
struct Identity {
    std::string name;
    int arity = 0;
    std::vector<std::pair<mpq_class, Monomial>> terms;  // coefficients nonzero
    bool requires_char_not_2 = false;
};

// Grammar: variables x1..x7, explicit `*`, parentheses, [a,b] commutator and
// (a,b,c) associator sugar, rational coefficients, optional `=` (both sides
// parsed, stored as lhs - rhs). Result is expanded and multilinearity-checked.
Identity parse_identity(const std::string& name, const std::string& text);

bool is_multilinear(const Identity& id);

// Dimension guard for the 7-variable enumeration (n^7 tuples).
inline constexpr int kSevenVarDimGuard = 8;

// Exhaustive evaluation on all n^k basis tuples, x1 varying slowest.
// Refuses with HypothesisViolation when the identity is char-flagged and the
// field has characteristic 2. Witness is the least failing tuple.
Verdict check_identity(const Algebra& a, const Identity& id, int workers = 1,
                       bool override_dim_guard = false);

// check of g1, [[x,y],[z,t]] = 0
Verdict is_lie_metabelian(const Algebra& a);

// f1..f14, g1..g5, jacobi (alias of f3). f12-f14 are char-flagged.
const std::map<std::string, Identity>& identity_catalog();

}  // namespace novikov
