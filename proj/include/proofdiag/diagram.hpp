#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "proofdiag/formula.hpp"

namespace proofdiag {

enum class LabelKind { Logical, ControlL, ControlR };

/// A 1-cell: either a formula-typed string label or one of the two control
/// colors L/R. Control colors are non-twisting: no swap gate may cross them.
class Label {
public:
    static Label logical(Formula f) { return Label(LabelKind::Logical, f); }
    static Label control_l() { return Label(LabelKind::ControlL, std::nullopt); }
    static Label control_r() { return Label(LabelKind::ControlR, std::nullopt); }

    LabelKind kind() const { return kind_; }
    bool is_logical() const { return kind_ == LabelKind::Logical; }
    bool is_control() const { return !is_logical(); }
    /// Only logical labels may cross a twisting operator.
    bool twisting() const { return is_logical(); }
    Formula formula() const;

    bool operator==(const Label& o) const {
        return kind_ == o.kind_ && formula_ == o.formula_;
    }
    bool operator!=(const Label& o) const { return !(*this == o); }

    std::string to_string() const;  ///< "L", "R", or the formula text.

private:
    Label(LabelKind kind, std::optional<Formula> f) : kind_(kind), formula_(f) {}
    LabelKind kind_;
    std::optional<Formula> formula_;
};

/// A word of 1-cells; may be empty (the 0-ary boundary).
using Word = std::vector<Label>;

Word concat(const Word& a, const Word& b);
Word subword(const Word& w, std::size_t first, std::size_t count);
std::string print_word(const Word& w);

/// An atomic-diagram type: name, formula parameters, and the fixed boundary
/// words they determine. Interned; copying is a pointer copy, equality is
/// pointer equality.
class GateType {
public:
    static GateType make(std::string name, std::vector<Formula> params,
                         Word domain, Word codomain, bool twisting);

    const std::string& name() const;
    const std::vector<Formula>& params() const;
    const Word& domain() const;
    const Word& codomain() const;
    /// True only for the swap family.
    bool twisting() const;

    bool operator==(const GateType& o) const { return node_ == o.node_; }
    bool operator!=(const GateType& o) const { return node_ != o.node_; }

    std::size_t hash() const;

    struct Node;

private:
    explicit GateType(const Node* n) : node_(n) {}
    const Node* node_;
};

/// One slot of a diagram layer: an identity wire or a gate occurrence.
class Cell {
public:
    static Cell wire(Label l) { return Cell(Repr(std::in_place_index<0>, l)); }
    static Cell gate(GateType g) {
        return Cell(Repr(std::in_place_index<1>, std::move(g)));
    }

    bool is_wire() const { return repr_.index() == 0; }
    bool is_gate() const { return repr_.index() == 1; }
    const Label& label() const { return std::get<0>(repr_); }
    const GateType& gate_type() const { return std::get<1>(repr_); }

    std::size_t width_in() const {
        return is_wire() ? 1 : gate_type().domain().size();
    }
    std::size_t width_out() const {
        return is_wire() ? 1 : gate_type().codomain().size();
    }

    bool operator==(const Cell& o) const { return repr_ == o.repr_; }
    bool operator!=(const Cell& o) const { return repr_ != o.repr_; }

private:
    using Repr = std::variant<Label, GateType>;
    explicit Cell(Repr r) : repr_(std::move(r)) {}
    Repr repr_;
};

using Layer = std::vector<Cell>;

/// A layered 2-dimensional term: the concatenated codomains of each layer
/// equal the concatenated domains of the next. Value type; all operations
/// are pure.
class Diagram {
public:
    static Diagram identity(Word w);
    static Diagram from_gate(GateType g);
    /// Builds and validates the typing chain; throws TypeError when broken.
    static Diagram from_parts(Word input, std::vector<Layer> layers);

    const Word& input() const { return input_; }
    const Word& output() const { return output_; }
    const std::vector<Layer>& layers() const { return layers_; }
    std::size_t depth() const { return layers_.size(); }

    bool operator==(const Diagram& o) const {
        return input_ == o.input_ && layers_ == o.layers_;
    }
    bool operator!=(const Diagram& o) const { return !(*this == o); }

    /// Re-checks the typing chain; throws TypeError on violation.
    void validate() const;

    /// Compact structural key. Stable within a process run; suitable for
    /// hashing visited states during search.
    std::string key() const;

    /// Total number of cells including wires (the "size" of the diagram).
    std::size_t cell_count() const;

private:
    Diagram(Word input, Word output, std::vector<Layer> layers)
        : input_(std::move(input)), output_(std::move(output)),
          layers_(std::move(layers)) {}

    Word input_, output_;
    std::vector<Layer> layers_;
};

/// Sequential composition: `lower` feeds into `upper`. Throws TypeError with
/// the first differing position when the boundary words disagree.
Diagram compose_seq(const Diagram& lower, const Diagram& upper);

/// Parallel composition; always defined. The shorter operand is padded with
/// identity layers on the input side.
Diagram compose_par(const Diagram& left, const Diagram& right);

/// Eager interchange normal form: every gate sits in the earliest layer where
/// all of its input wires (and, for 0-ary gates, its host gap) exist; cells
/// are ordered by wire offset inside each layer; all-wire layers vanish.
/// Idempotent; two diagrams equal modulo interchange have identical forms.
Diagram canonical_form(const Diagram& d);

/// Decides the PRO equality: structural identity of canonical forms.
bool equal_mod_interchange(const Diagram& a, const Diagram& b);

std::size_t gate_count(const Diagram& d);
std::size_t gate_count(const Diagram& d, const std::set<std::string>& names);

/// Identifies a gate occurrence inside a diagram.
struct GateOccurrence {
    std::size_t layer = 0;   ///< 0-based layer index.
    std::size_t cell = 0;    ///< cell index within the layer.
    std::size_t offset = 0;  ///< wire offset of the domain within the layer input.
};

/// Splits a closed diagram (empty input) into a parallel pair at the given
/// output index, by connected-component analysis over wires and gates.
/// Throws TypeError when a gate or wire path connects the two regions.
std::pair<Diagram, Diagram> decompose_parallel(const Diagram& d,
                                               std::size_t output_split);

/// Gates whose outputs all reach the output boundary through wires only
/// (for 0-output gates: whose host gap stays open to the top), paired with
/// the offset of their leftmost output in the output word. Sorted by offset.
std::vector<std::pair<GateOccurrence, std::size_t>> last_gates(const Diagram& d);

/// Removes a last gate, extending its input wires to the output boundary.
/// The result is returned in canonical form.
Diagram peel_gate(const Diagram& d, const GateOccurrence& occ);

}  // namespace proofdiag
