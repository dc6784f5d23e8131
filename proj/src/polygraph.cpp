#include "proofdiag/polygraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "proofdiag/errors.hpp"

namespace proofdiag {

SignatureKind signature_of(PolygraphKind kind) {
    switch (kind) {
    case PolygraphKind::ControlMll:
    case PolygraphKind::ControlMllUnits:
        return SignatureKind::Control;
    default:
        return SignatureKind::Plain;
    }
}

std::string polygraph_name(PolygraphKind kind) {
    switch (kind) {
    case PolygraphKind::Permutations: return "S";
    case PolygraphKind::Mll: return "MLL";
    case PolygraphKind::MllUnits: return "MLLc";
    case PolygraphKind::ControlMll: return "ctrlMLL";
    case PolygraphKind::ControlMllUnits: return "ctrlMLLc";
    }
    return {};
}

std::optional<PolygraphKind> polygraph_by_name(std::string_view name) {
    if (name == "S") return PolygraphKind::Permutations;
    if (name == "MLL") return PolygraphKind::Mll;
    if (name == "MLLc") return PolygraphKind::MllUnits;
    if (name == "ctrlMLL") return PolygraphKind::ControlMll;
    if (name == "ctrlMLLc") return PolygraphKind::ControlMllUnits;
    return std::nullopt;
}

GateType signature_gate(SignatureKind sig, std::string_view name,
                        const std::vector<Formula>& params) {
    auto expect_arity = [&](std::size_t n) {
        if (params.size() != n)
            throw Error("gate '" + std::string(name) + "' expects " +
                        std::to_string(n) + " parameters, got " +
                        std::to_string(params.size()));
    };
    auto ll = [](Formula f) { return Label::logical(f); };
    const Label L = Label::control_l(), R = Label::control_r();

    if (name == "swap") {
        expect_arity(2);
        Formula a = params[0], b = params[1];
        return GateType::make("swap", {a, b}, {ll(a), ll(b)}, {ll(b), ll(a)}, true);
    }
    if (name == "par") {
        expect_arity(2);
        Formula a = params[0], b = params[1];
        return GateType::make("par", {a, b}, {ll(a), ll(b)},
                              {ll(Formula::par(a, b))}, false);
    }
    if (name == "tensor") {
        expect_arity(2);
        Formula a = params[0], b = params[1];
        Word dom = sig == SignatureKind::Plain ? Word{ll(a), ll(b)}
                                               : Word{ll(a), R, L, ll(b)};
        return GateType::make("tensor", {a, b}, std::move(dom),
                              {ll(Formula::tensor(a, b))}, false);
    }
    if (name == "ax") {
        expect_arity(1);
        Formula a = params[0];
        Word cod = sig == SignatureKind::Plain ? Word{ll(a), ll(dual(a))}
                                               : Word{L, ll(a), ll(dual(a)), R};
        return GateType::make("ax", {a}, {}, std::move(cod), false);
    }
    if (name == "cut") {
        expect_arity(1);
        Formula a = params[0];
        Word dom = sig == SignatureKind::Plain ? Word{ll(a), ll(dual(a))}
                                               : Word{ll(a), R, L, ll(dual(a))};
        return GateType::make("cut", {a}, std::move(dom), {}, false);
    }
    if (name == "one") {
        expect_arity(0);
        Word cod = sig == SignatureKind::Plain ? Word{ll(Formula::one())}
                                               : Word{L, ll(Formula::one()), R};
        return GateType::make("one", {}, {}, std::move(cod), false);
    }
    if (name == "bot") {
        expect_arity(0);
        return GateType::make("bot", {}, {}, {ll(Formula::bot())}, false);
    }
    throw Error("unknown gate family '" + std::string(name) + "'");
}

bool is_twisting_family(RuleFamily f) {
    switch (f) {
    case RuleFamily::TwistInvolution:
    case RuleFamily::YangBaxter:
    case RuleFamily::Naturality:
    case RuleFamily::AxInvolution:
        return true;
    case RuleFamily::CutElimination:
    case RuleFamily::Unit:
        return false;
    }
    return false;
}

std::string family_name(RuleFamily f) {
    switch (f) {
    case RuleFamily::TwistInvolution: return "twist-involution";
    case RuleFamily::YangBaxter: return "yang-baxter";
    case RuleFamily::Naturality: return "naturality";
    case RuleFamily::AxInvolution: return "ax-involution";
    case RuleFamily::CutElimination: return "cut-elimination";
    case RuleFamily::Unit: return "unit";
    }
    return {};
}

RewriteRule make_rule(std::string name, RuleFamily family, Diagram lhs, Diagram rhs) {
    if (lhs.input() != rhs.input() || lhs.output() != rhs.output())
        throw Error("rule '" + name + "' has mismatched boundaries");
    if (gate_count(lhs) == 0)
        throw Error("rule '" + name + "' has a gate-free left side");
    return RewriteRule{std::move(name), family, std::move(lhs), std::move(rhs)};
}

// --- Patterns ---------------------------------------------------------------

PatFormula PatFormula::var(int id) {
    PatFormula p;
    p.k_ = K::Var;
    p.var_ = id;
    return p;
}

PatFormula PatFormula::lit(Formula f) {
    PatFormula p;
    p.k_ = K::Lit;
    p.lit_ = f;
    return p;
}

PatFormula PatFormula::dualized(PatFormula inner) {
    PatFormula p;
    p.k_ = K::Dual;
    p.l_ = std::make_shared<PatFormula>(std::move(inner));
    return p;
}

PatFormula PatFormula::tensor(PatFormula l, PatFormula r) {
    PatFormula p;
    p.k_ = K::Tensor;
    p.l_ = std::make_shared<PatFormula>(std::move(l));
    p.r_ = std::make_shared<PatFormula>(std::move(r));
    return p;
}

PatFormula PatFormula::par(PatFormula l, PatFormula r) {
    PatFormula p;
    p.k_ = K::Par;
    p.l_ = std::make_shared<PatFormula>(std::move(l));
    p.r_ = std::make_shared<PatFormula>(std::move(r));
    return p;
}

PatFormula PatFormula::one() {
    PatFormula p;
    p.k_ = K::One;
    return p;
}

PatFormula PatFormula::bot() {
    PatFormula p;
    p.k_ = K::Bot;
    return p;
}

bool PatFormula::match(Formula f, std::vector<std::optional<Formula>>& binding) const {
    switch (k_) {
    case K::Var: {
        auto& slot = binding[static_cast<std::size_t>(var_)];
        if (slot)
            return *slot == f;
        slot = f;
        return true;
    }
    case K::Lit:
        return *lit_ == f;
    case K::Dual:
        return l_->match(dual(f), binding);
    case K::Tensor:
        return f.kind() == FormulaKind::Tensor && l_->match(f.left(), binding) &&
               r_->match(f.right(), binding);
    case K::Par:
        return f.kind() == FormulaKind::Par && l_->match(f.left(), binding) &&
               r_->match(f.right(), binding);
    case K::One:
        return f.kind() == FormulaKind::One;
    case K::Bot:
        return f.kind() == FormulaKind::Bot;
    }
    return false;
}

Formula PatFormula::substitute(const std::vector<std::optional<Formula>>& binding) const {
    switch (k_) {
    case K::Var: {
        const auto& slot = binding[static_cast<std::size_t>(var_)];
        if (!slot)
            throw Error("unbound pattern variable " + std::to_string(var_));
        return *slot;
    }
    case K::Lit: return *lit_;
    case K::Dual: return dual(l_->substitute(binding));
    case K::Tensor: return Formula::tensor(l_->substitute(binding), r_->substitute(binding));
    case K::Par: return Formula::par(l_->substitute(binding), r_->substitute(binding));
    case K::One: return Formula::one();
    case K::Bot: return Formula::bot();
    }
    throw Error("unreachable pattern kind");
}

bool PatLabel::match(const Label& l, std::vector<std::optional<Formula>>& binding) const {
    switch (k) {
    case K::ControlL: return l.kind() == LabelKind::ControlL;
    case K::ControlR: return l.kind() == LabelKind::ControlR;
    case K::Logical: return l.is_logical() && formula->match(l.formula(), binding);
    }
    return false;
}

Label PatLabel::substitute(const std::vector<std::optional<Formula>>& binding) const {
    switch (k) {
    case K::ControlL: return Label::control_l();
    case K::ControlR: return Label::control_r();
    case K::Logical: return Label::logical(formula->substitute(binding));
    }
    throw Error("unreachable pattern label kind");
}

Diagram instantiate_pattern(const PatDiagram& pat, SignatureKind sig,
                            const std::vector<std::optional<Formula>>& binding) {
    Word input;
    for (const PatLabel& l : pat.input)
        input.push_back(l.substitute(binding));
    std::vector<Layer> layers;
    for (const auto& pl : pat.layers) {
        Layer layer;
        for (const PatCell& pc : pl) {
            if (std::holds_alternative<PatLabel>(pc)) {
                layer.push_back(Cell::wire(std::get<PatLabel>(pc).substitute(binding)));
            } else {
                const PatGate& g = std::get<PatGate>(pc);
                std::vector<Formula> params;
                for (const PatFormula& pf : g.params)
                    params.push_back(pf.substitute(binding));
                layer.push_back(Cell::gate(signature_gate(sig, g.name, params)));
            }
        }
        layers.push_back(std::move(layer));
    }
    return Diagram::from_parts(std::move(input), std::move(layers));
}

RewriteRule instantiate_schema(const RuleSchema& schema,
                               const std::vector<Formula>& binding) {
    if (static_cast<int>(binding.size()) != schema.var_count)
        throw Error("schema '" + schema.name + "' expects " +
                    std::to_string(schema.var_count) + " variables");
    std::vector<std::optional<Formula>> b(binding.begin(), binding.end());
    std::string name = schema.name;
    if (!binding.empty()) {
        name += '[';
        for (std::size_t i = 0; i < binding.size(); ++i) {
            if (i)
                name += ',';
            name += binding[i].text();
        }
        name += ']';
    }
    return make_rule(std::move(name), schema.family,
                     instantiate_pattern(schema.lhs, schema.sig, b),
                     instantiate_pattern(schema.rhs, schema.sig, b));
}

// --- Universe ---------------------------------------------------------------

namespace {

void close_into(Formula f, std::set<Formula>& out) {
    if (!out.insert(f).second)
        return;
    close_into(dual(f), out);
    if (f.is_binary()) {
        close_into(f.left(), out);
        close_into(f.right(), out);
    }
}

}  // namespace

std::vector<Formula> universe_closure(const std::vector<Formula>& seed) {
    std::set<Formula> acc;
    for (Formula f : seed)
        close_into(f, acc);
    return std::vector<Formula>(acc.begin(), acc.end());
}

bool universe_is_closed(const std::vector<Formula>& u) {
    std::set<Formula> have(u.begin(), u.end());
    for (Formula f : u) {
        if (!have.count(dual(f)))
            return false;
        if (f.is_binary() && (!have.count(f.left()) || !have.count(f.right())))
            return false;
    }
    return true;
}

// --- Schema tables ----------------------------------------------------------

namespace {

using PF = PatFormula;

PF V0() { return PF::var(0); }
PF V1() { return PF::var(1); }
PF V2() { return PF::var(2); }

PatCell w(PF f) { return PatLabel::logical(std::move(f)); }
PatCell wl() { return PatLabel::control_l(); }
PatCell wr() { return PatLabel::control_r(); }
PatCell g(std::string name, std::vector<PF> params) {
    return PatGate{std::move(name), std::move(params)};
}
PatLabel il(PF f) { return PatLabel::logical(std::move(f)); }

RuleSchema schema(std::string name, RuleFamily fam, SignatureKind sig, int vars,
                  std::vector<PatLabel> in, std::vector<std::vector<PatCell>> lhs,
                  std::vector<std::vector<PatCell>> rhs) {
    return RuleSchema{std::move(name), fam, sig, vars,
                      PatDiagram{in, std::move(lhs)},
                      PatDiagram{std::move(in), std::move(rhs)}};
}

// swap . swap => id
RuleSchema swap_involution(SignatureKind sig) {
    return schema("swap_involution", RuleFamily::TwistInvolution, sig, 2,
                  {il(V0()), il(V1())},
                  {{g("swap", {V0(), V1()})}, {g("swap", {V1(), V0()})}},
                  {});
}

RuleSchema yang_baxter(SignatureKind sig) {
    return schema("yang_baxter", RuleFamily::YangBaxter, sig, 3,
                  {il(V0()), il(V1()), il(V2())},
                  {{g("swap", {V0(), V1()}), w(V2())},
                   {w(V1()), g("swap", {V0(), V2()})},
                   {g("swap", {V1(), V2()}), w(V0())}},
                  {{w(V0()), g("swap", {V1(), V2()})},
                   {g("swap", {V0(), V2()}), w(V1())},
                   {w(V2()), g("swap", {V0(), V1()})}});
}

// An ax pair crossing a wire to its right lands beside it: vars A=0, B=1.
RuleSchema ax_slide_right() {
    return schema("ax_slide_right", RuleFamily::Naturality, SignatureKind::Plain, 2,
                  {il(V1())},
                  {{g("ax", {V0()}), w(V1())},
                   {w(V0()), g("swap", {PF::dualized(V0()), V1()})},
                   {g("swap", {V0(), V1()}), w(PF::dualized(V0()))}},
                  {{w(V1()), g("ax", {V0()})}});
}

RuleSchema ax_slide_left() {
    return schema("ax_slide_left", RuleFamily::Naturality, SignatureKind::Plain, 2,
                  {il(V1())},
                  {{w(V1()), g("ax", {V0()})},
                   {g("swap", {V1(), V0()}), w(PF::dualized(V0()))},
                   {w(V0()), g("swap", {V1(), PF::dualized(V0())})}},
                  {{g("ax", {V0()}), w(V1())}});
}

RuleSchema cut_slide_left() {
    return schema("cut_slide_left", RuleFamily::Naturality, SignatureKind::Plain, 2,
                  {il(V0()), il(PF::dualized(V0())), il(V1())},
                  {{w(V0()), g("swap", {PF::dualized(V0()), V1()})},
                   {g("swap", {V0(), V1()}), w(PF::dualized(V0()))},
                   {w(V1()), g("cut", {V0()})}},
                  {{g("cut", {V0()}), w(V1())}});
}

RuleSchema cut_slide_right() {
    return schema("cut_slide_right", RuleFamily::Naturality, SignatureKind::Plain, 2,
                  {il(V1()), il(V0()), il(PF::dualized(V0()))},
                  {{g("swap", {V1(), V0()}), w(PF::dualized(V0()))},
                   {w(V0()), g("swap", {V1(), PF::dualized(V0())})},
                   {g("cut", {V0()}), w(V1())}},
                  {{w(V1()), g("cut", {V0()})}});
}

// A binary connective slides off a crossing: gate built below, then swapped,
// equals crossing the operands first. vars A=0, B=1, C=2.
RuleSchema binary_slide_right(const std::string& gate) {
    PF prod = gate == "tensor" ? PF::tensor(V0(), V1()) : PF::par(V0(), V1());
    return schema(gate + "_slide_right", RuleFamily::Naturality, SignatureKind::Plain,
                  3, {il(V0()), il(V1()), il(V2())},
                  {{g(gate, {V0(), V1()}), w(V2())}, {g("swap", {prod, V2()})}},
                  {{w(V0()), g("swap", {V1(), V2()})},
                   {g("swap", {V0(), V2()}), w(V1())},
                   {w(V2()), g(gate, {V0(), V1()})}});
}

RuleSchema binary_slide_left(const std::string& gate) {
    PF prod = gate == "tensor" ? PF::tensor(V1(), V2()) : PF::par(V1(), V2());
    return schema(gate + "_slide_left", RuleFamily::Naturality, SignatureKind::Plain,
                  3, {il(V0()), il(V1()), il(V2())},
                  {{w(V0()), g(gate, {V1(), V2()})}, {g("swap", {V0(), prod})}},
                  {{g("swap", {V0(), V1()}), w(V2())},
                   {w(V1()), g("swap", {V0(), V2()})},
                   {g(gate, {V1(), V2()}), w(V0())}});
}

// Involution rules: an axiom (cut) under (over) its own crossing flips its index.
RuleSchema ax_involution_plain() {
    return schema("ax_involution", RuleFamily::AxInvolution, SignatureKind::Plain, 1,
                  {},
                  {{g("ax", {V0()})}, {g("swap", {V0(), PF::dualized(V0())})}},
                  {{g("ax", {PF::dualized(V0())})}});
}

RuleSchema cut_involution_plain() {
    return schema("cut_involution", RuleFamily::AxInvolution, SignatureKind::Plain, 1,
                  {il(PF::dualized(V0())), il(V0())},
                  {{g("swap", {PF::dualized(V0()), V0()})}, {g("cut", {V0()})}},
                  {{g("cut", {PF::dualized(V0())})}});
}

RuleSchema ax_involution_control() {
    return schema("ax_involution", RuleFamily::AxInvolution, SignatureKind::Control, 1,
                  {},
                  {{g("ax", {V0()})},
                   {wl(), g("swap", {V0(), PF::dualized(V0())}), wr()}},
                  {{g("ax", {PF::dualized(V0())})}});
}

// Unit slides: a 0-ary unit gate crosses any wire. `unit` is "one" or "bot".
RuleSchema unit_slide_left(const std::string& unit, SignatureKind sig) {
    PF uf = unit == "one" ? PF::one() : PF::bot();
    return schema(unit + "_slide_left", RuleFamily::Naturality, sig, 1, {il(V0())},
                  {{w(V0()), g(unit, {})}, {g("swap", {V0(), uf})}},
                  {{g(unit, {}), w(V0())}});
}

RuleSchema unit_slide_right_sig(const std::string& unit, SignatureKind sig) {
    PF uf = unit == "one" ? PF::one() : PF::bot();
    return schema(unit + "_slide_right", RuleFamily::Naturality, sig, 1, {il(V0())},
                  {{g(unit, {}), w(V0())}, {g("swap", {uf, V0()})}},
                  {{w(V0()), g(unit, {})}});
}

// Cut elimination against the par/tensor pair: vars A=0, B=1.
RuleSchema connective_cut(bool par_first) {
    PF A = V0(), B = V1();
    PF left_prod = par_first ? PF::par(A, B) : PF::tensor(A, B);
    std::string lg = par_first ? "par" : "tensor";
    std::string rg = par_first ? "tensor" : "par";
    return schema(par_first ? "par_tensor_cut" : "tensor_par_cut",
                  RuleFamily::CutElimination, SignatureKind::Plain, 2,
                  {il(A), il(B), il(PF::dualized(B)), il(PF::dualized(A))},
                  {{g(lg, {A, B}), g(rg, {PF::dualized(B), PF::dualized(A)})},
                   {g("cut", {left_prod})}},
                  {{w(A), g("cut", {B}), w(PF::dualized(A))}, {g("cut", {A})}});
}

// An axiom cut directly against a wire: var A=0.
RuleSchema ax_cut_left() {
    return schema("ax_cut_left", RuleFamily::CutElimination, SignatureKind::Plain, 1,
                  {il(V0())},
                  {{g("ax", {V0()}), w(V0())},
                   {w(V0()), g("cut", {PF::dualized(V0())})}},
                  {});
}

RuleSchema ax_cut_right() {
    return schema("ax_cut_right", RuleFamily::CutElimination, SignatureKind::Plain, 1,
                  {il(V0())},
                  {{w(V0()), g("ax", {PF::dualized(V0())})},
                   {g("cut", {V0()}), w(V0())}},
                  {});
}

// The axiom whose far leg crosses the near one before being cut.
RuleSchema ax_swap_cut() {
    return schema("ax_swap_cut", RuleFamily::CutElimination, SignatureKind::Plain, 1,
                  {il(V0())},
                  {{g("ax", {PF::dualized(V0())}), w(V0())},
                   {w(PF::dualized(V0())), g("swap", {V0(), V0()})},
                   {g("cut", {PF::dualized(V0())}), w(V0())}},
                  {});
}

RuleSchema unit_cut(bool bot_first) {
    PF cut_param = bot_first ? PF::bot() : PF::one();
    std::string a = bot_first ? "bot" : "one";
    std::string b = bot_first ? "one" : "bot";
    return schema(bot_first ? "bot_one_cut" : "one_bot_cut", RuleFamily::Unit,
                  SignatureKind::Plain, 0, {},
                  {{g(a, {}), g(b, {})}, {g("cut", {cut_param})}},
                  {});
}

std::vector<RuleSchema> schemas_for(PolygraphKind kind) {
    SignatureKind sig = signature_of(kind);
    std::vector<RuleSchema> out;
    out.push_back(swap_involution(sig));
    out.push_back(yang_baxter(sig));
    switch (kind) {
    case PolygraphKind::Permutations:
        break;
    case PolygraphKind::Mll:
    case PolygraphKind::MllUnits:
        out.push_back(ax_slide_right());
        out.push_back(ax_slide_left());
        out.push_back(cut_slide_left());
        out.push_back(cut_slide_right());
        out.push_back(binary_slide_right("tensor"));
        out.push_back(binary_slide_left("tensor"));
        out.push_back(binary_slide_right("par"));
        out.push_back(binary_slide_left("par"));
        out.push_back(ax_involution_plain());
        out.push_back(cut_involution_plain());
        out.push_back(connective_cut(true));
        out.push_back(connective_cut(false));
        out.push_back(ax_cut_left());
        out.push_back(ax_cut_right());
        out.push_back(ax_swap_cut());
        if (kind == PolygraphKind::MllUnits) {
            out.push_back(unit_slide_right_sig("bot", SignatureKind::Plain));
            out.push_back(unit_slide_left("bot", SignatureKind::Plain));
            out.push_back(unit_slide_right_sig("one", SignatureKind::Plain));
            out.push_back(unit_slide_left("one", SignatureKind::Plain));
            out.push_back(unit_cut(true));
            out.push_back(unit_cut(false));
        }
        break;
    case PolygraphKind::ControlMll:
    case PolygraphKind::ControlMllUnits: {
        RuleSchema psr = binary_slide_right("par");
        RuleSchema psl = binary_slide_left("par");
        psr.sig = psl.sig = SignatureKind::Control;
        out.push_back(std::move(psr));
        out.push_back(std::move(psl));
        out.push_back(ax_involution_control());
        if (kind == PolygraphKind::ControlMllUnits) {
            out.push_back(unit_slide_right_sig("bot", SignatureKind::Control));
            out.push_back(unit_slide_left("bot", SignatureKind::Control));
        }
        break;
    }
    }
    return out;
}

std::vector<std::string> families_for(PolygraphKind kind) {
    switch (kind) {
    case PolygraphKind::Permutations:
        return {"swap"};
    case PolygraphKind::Mll:
    case PolygraphKind::ControlMll:
        return {"ax", "cut", "par", "swap", "tensor"};
    case PolygraphKind::MllUnits:
    case PolygraphKind::ControlMllUnits:
        return {"ax", "bot", "cut", "one", "par", "swap", "tensor"};
    }
    return {};
}

std::size_t family_arity(const std::string& name) {
    if (name == "one" || name == "bot")
        return 0;
    if (name == "ax" || name == "cut")
        return 1;
    return 2;
}

// Smoke-instantiates every schema once so malformed tables fail loudly at
// first use rather than mid-rewrite.
void validate_schemas(const std::vector<RuleSchema>& schemas) {
    std::vector<Formula> atoms = {Formula::atom("zchk0"), Formula::atom("zchk1"),
                                  Formula::atom("zchk2")};
    for (const RuleSchema& s : schemas) {
        std::vector<Formula> binding(atoms.begin(),
                                     atoms.begin() + s.var_count);
        instantiate_schema(s, binding);
    }
}

}  // namespace

Polygraph::Polygraph(PolygraphKind kind, std::vector<Formula> universe)
    : kind_(kind), universe_(std::move(universe)), families_(families_for(kind)),
      schemas_(schemas_for(kind)) {}

Polygraph Polygraph::instantiate(PolygraphKind kind, std::vector<Formula> universe) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (!universe_is_closed(universe))
        throw Error("formula universe is not closed under duals and subformulas");
    Polygraph p(kind, std::move(universe));
    validate_schemas(p.schemas_);
    return p;
}

std::vector<GateType> Polygraph::gate_instances() const {
    std::vector<GateType> out;
    SignatureKind sig = signature();
    for (const std::string& fam : families_) {
        std::size_t arity = family_arity(fam);
        if (arity == 0) {
            out.push_back(signature_gate(sig, fam, {}));
        } else if (arity == 1) {
            for (Formula a : universe_)
                out.push_back(signature_gate(sig, fam, {a}));
        } else {
            for (Formula a : universe_)
                for (Formula b : universe_)
                    out.push_back(signature_gate(sig, fam, {a, b}));
        }
    }
    return out;
}

std::vector<RewriteRule> Polygraph::rules() const {
    std::vector<RewriteRule> out;
    for (const RuleSchema& s : schemas_) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(s.var_count), 0);
        if (s.var_count == 0) {
            out.push_back(instantiate_schema(s, {}));
            continue;
        }
        if (universe_.empty())
            continue;
        for (;;) {
            std::vector<Formula> binding;
            for (std::size_t i : idx)
                binding.push_back(universe_[i]);
            out.push_back(instantiate_schema(s, binding));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == universe_.size())
                idx[k++] = 0;
            if (k == idx.size())
                break;
        }
    }
    return out;
}

GateType Polygraph::gate(std::string_view name, const std::vector<Formula>& params) const {
    if (std::find(families_.begin(), families_.end(), name) == families_.end())
        throw Error("polygraph " + polygraph_name(kind_) + " has no gate family '" +
                    std::string(name) + "'");
    return signature_gate(signature(), name, params);
}

}  // namespace proofdiag
