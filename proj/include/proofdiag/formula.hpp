#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace proofdiag {

enum class FormulaKind { Atom, DualAtom, Tensor, Par, One, Bot };

/// An MLLc formula in negation normal form: duality appears on atoms only,
/// compound connectives and units are never wrapped in a negation node.
///
/// Formulas are interned: a Formula is a cheap handle, copying is a pointer
/// copy and equality is pointer equality. Instances are immutable and safe
/// to share between threads.
class Formula {
public:
    static Formula atom(std::string_view name);
    static Formula dual_atom(std::string_view name);
    static Formula tensor(Formula left, Formula right);
    static Formula par(Formula left, Formula right);
    static Formula one();
    static Formula bot();

    FormulaKind kind() const;
    bool is_binary() const;
    const std::string& name() const;  ///< Atom / DualAtom only.
    Formula left() const;             ///< Tensor / Par only.
    Formula right() const;

    /// Grammar-conform text: atoms as written, `a^`, `(l*r)`, `(l@r)`, `1`, `bot`.
    const std::string& text() const;

    bool operator==(const Formula& o) const { return node_ == o.node_; }
    bool operator!=(const Formula& o) const { return node_ != o.node_; }
    /// Total order by printed text; deterministic across runs.
    bool operator<(const Formula& o) const;

    std::size_t hash() const { return std::hash<const void*>()(node_); }

    struct Node;

private:
    explicit Formula(const Node* node) : node_(node) {}
    const Node* node_;
};

/// De Morgan dual; an involution. Binary connectives swap their operands.
Formula dual(Formula f);

/// Parse the external formula grammar. `(G)^`, `1^`, `bot^` and any other
/// postfix dual are expanded by De Morgan rewriting at parse time, so the
/// result is always in negation normal form. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Inverse of parse_formula up to canonical re-printing.
std::string print_formula(Formula f);

/// One-sided sequent; formula order is significant (exchange is explicit).
using Sequent = std::vector<Formula>;

/// "a, a^" style rendering.
std::string print_sequent(const Sequent& s);

}  // namespace proofdiag

template <>
struct std::hash<proofdiag::Formula> {
    std::size_t operator()(const proofdiag::Formula& f) const { return f.hash(); }
};
