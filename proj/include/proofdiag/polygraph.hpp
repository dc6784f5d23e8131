#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "proofdiag/diagram.hpp"
#include "proofdiag/formula.hpp"

namespace proofdiag {

enum class PolygraphKind { Permutations, Mll, MllUnits, ControlMll, ControlMllUnits };

/// Which boundary shapes the gate families use: plain sequent wiring or the
/// control wiring with the L/R colors.
enum class SignatureKind { Plain, Control };

SignatureKind signature_of(PolygraphKind kind);
/// External names: S, MLL, MLLc, ctrlMLL, ctrlMLLc.
std::string polygraph_name(PolygraphKind kind);
std::optional<PolygraphKind> polygraph_by_name(std::string_view name);

/// The gate family table. Throws Error for names or arities the signature
/// does not define.
GateType signature_gate(SignatureKind sig, std::string_view name,
                        const std::vector<Formula>& params);

enum class RuleFamily {
    TwistInvolution,
    YangBaxter,
    Naturality,
    AxInvolution,
    CutElimination,
    Unit,
};

bool is_twisting_family(RuleFamily f);
std::string family_name(RuleFamily f);

/// An oriented 3-cell: both sides share their boundary words and the left
/// side contains at least one gate.
struct RewriteRule {
    std::string name;
    RuleFamily family;
    Diagram lhs, rhs;
};

RewriteRule make_rule(std::string name, RuleFamily family, Diagram lhs, Diagram rhs);

// --- Rule schemas -----------------------------------------------------------
//
// Rules are stored schematically: a pattern diagram over formula variables,
// instantiated on demand against the gates of a concrete diagram or over a
// formula universe.

class PatFormula {
public:
    static PatFormula var(int id);
    static PatFormula lit(Formula f);
    static PatFormula dualized(PatFormula inner);
    static PatFormula tensor(PatFormula l, PatFormula r);
    static PatFormula par(PatFormula l, PatFormula r);
    static PatFormula one();
    static PatFormula bot();

    /// One-way matching; extends `binding` (indexed by variable id).
    bool match(Formula f, std::vector<std::optional<Formula>>& binding) const;
    Formula substitute(const std::vector<std::optional<Formula>>& binding) const;

private:
    enum class K { Var, Lit, Dual, Tensor, Par, One, Bot };
    K k_ = K::One;
    int var_ = -1;
    std::optional<Formula> lit_;
    std::shared_ptr<const PatFormula> l_, r_;
};

struct PatLabel {
    enum class K { ControlL, ControlR, Logical };
    K k = K::Logical;
    std::optional<PatFormula> formula;

    static PatLabel control_l() { return {K::ControlL, std::nullopt}; }
    static PatLabel control_r() { return {K::ControlR, std::nullopt}; }
    static PatLabel logical(PatFormula f) { return {K::Logical, std::move(f)}; }

    bool match(const Label& l, std::vector<std::optional<Formula>>& binding) const;
    Label substitute(const std::vector<std::optional<Formula>>& binding) const;
};

struct PatGate {
    std::string name;
    std::vector<PatFormula> params;
};

using PatCell = std::variant<PatLabel, PatGate>;

struct PatDiagram {
    std::vector<PatLabel> input;
    std::vector<std::vector<PatCell>> layers;
};

struct RuleSchema {
    std::string name;
    RuleFamily family;
    SignatureKind sig;
    int var_count = 0;
    PatDiagram lhs, rhs;
};

/// Substitutes a full binding into a pattern diagram.
Diagram instantiate_pattern(const PatDiagram& pat, SignatureKind sig,
                            const std::vector<std::optional<Formula>>& binding);

RewriteRule instantiate_schema(const RuleSchema& schema,
                               const std::vector<Formula>& binding);

// --- Universe ---------------------------------------------------------------

/// Subformula + dual closure, sorted and deduplicated.
std::vector<Formula> universe_closure(const std::vector<Formula>& seed);
bool universe_is_closed(const std::vector<Formula>& u);

// --- Polygraph --------------------------------------------------------------

/// A bundled signature-plus-rules instance. Immutable after construction;
/// safe to share between threads.
class Polygraph {
public:
    /// Requires the universe to be closed under duals and subformulas
    /// (compute it with universe_closure); throws Error otherwise.
    static Polygraph instantiate(PolygraphKind kind, std::vector<Formula> universe);

    PolygraphKind kind() const { return kind_; }
    SignatureKind signature() const { return signature_of(kind_); }
    const std::vector<Formula>& universe() const { return universe_; }
    const std::vector<RuleSchema>& schemas() const { return schemas_; }

    /// Gate family names available in this polygraph.
    const std::vector<std::string>& gate_families() const { return families_; }
    /// Concrete gate instances, parameters drawn from the universe.
    std::vector<GateType> gate_instances() const;
    /// Concrete rule instances, schema variables drawn from the universe.
    std::vector<RewriteRule> rules() const;

    GateType gate(std::string_view name, const std::vector<Formula>& params) const;
    bool twisting(const Label& l) const { return l.is_logical(); }
    bool has_cut_rules() const {
        return kind_ == PolygraphKind::Mll || kind_ == PolygraphKind::MllUnits;
    }

private:
    Polygraph(PolygraphKind kind, std::vector<Formula> universe);

    PolygraphKind kind_;
    std::vector<Formula> universe_;
    std::vector<std::string> families_;
    std::vector<RuleSchema> schemas_;
};

}  // namespace proofdiag
