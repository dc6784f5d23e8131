#include "proofdiag/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "proofdiag/errors.hpp"

namespace proofdiag {

Formula Label::formula() const {
    if (!formula_)
        throw Error("control label has no formula");
    return *formula_;
}

std::string Label::to_string() const {
    switch (kind_) {
    case LabelKind::ControlL: return "L";
    case LabelKind::ControlR: return "R";
    case LabelKind::Logical: return formula_->text();
    }
    return {};
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word subword(const Word& w, std::size_t first, std::size_t count) {
    return Word(w.begin() + first, w.begin() + first + count);
}

std::string print_word(const Word& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ", ";
        out += w[i].to_string();
    }
    return out + "]";
}

// --- GateType interning ---------------------------------------------------

struct GateType::Node {
    std::string name;
    std::vector<Formula> params;
    Word domain, codomain;
    bool twisting;
};

namespace {

struct GateKey {
    std::string name;
    std::vector<Formula> params;
    std::vector<std::pair<int, const void*>> boundary;  // kind tag + formula identity

    bool operator<(const GateKey& o) const {
        if (name != o.name)
            return name < o.name;
        auto id = [](Formula f) { return f.hash(); };
        if (params.size() != o.params.size())
            return params.size() < o.params.size();
        for (std::size_t i = 0; i < params.size(); ++i)
            if (params[i] != o.params[i])
                return id(params[i]) < id(o.params[i]);
        return boundary < o.boundary;
    }
};

std::pair<int, const void*> label_id(const Label& l) {
    int tag = static_cast<int>(l.kind());
    const void* p = nullptr;
    if (l.is_logical())
        p = reinterpret_cast<const void*>(l.formula().hash());
    return {tag, p};
}

struct GatePool {
    std::mutex mutex;
    std::map<GateKey, GateType::Node*> table;
};

GatePool& gate_pool() {
    static GatePool p;
    return p;
}

}  // namespace

GateType GateType::make(std::string name, std::vector<Formula> params, Word domain,
                        Word codomain, bool twisting) {
    GateKey key{name, params, {}};
    key.boundary.reserve(domain.size() + codomain.size() + 1);
    for (const Label& l : domain)
        key.boundary.push_back(label_id(l));
    key.boundary.push_back({-1, nullptr});
    for (const Label& l : codomain)
        key.boundary.push_back(label_id(l));
    key.boundary.push_back({twisting ? -2 : -3, nullptr});

    GatePool& pool = gate_pool();
    std::lock_guard<std::mutex> lock(pool.mutex);
    auto it = pool.table.find(key);
    if (it != pool.table.end())
        return GateType(it->second);
    auto* node = new Node{std::move(name), std::move(params), std::move(domain),
                          std::move(codomain), twisting};
    pool.table.emplace(std::move(key), node);
    return GateType(node);
}

const std::string& GateType::name() const { return node_->name; }
const std::vector<Formula>& GateType::params() const { return node_->params; }
const Word& GateType::domain() const { return node_->domain; }
const Word& GateType::codomain() const { return node_->codomain; }
bool GateType::twisting() const { return node_->twisting; }
std::size_t GateType::hash() const { return std::hash<const void*>()(node_); }

// --- Diagram basics -------------------------------------------------------

namespace {

Word layer_output(const Word& in, const Layer& layer, std::size_t layer_index) {
    Word out;
    std::size_t pos = 0;
    for (const Cell& c : layer) {
        if (c.is_wire()) {
            if (pos >= in.size() || in[pos] != c.label())
                throw TypeError("typing chain broken at layer " +
                                std::to_string(layer_index) + ", position " +
                                std::to_string(pos));
            out.push_back(c.label());
            ++pos;
        } else {
            const Word& dom = c.gate_type().domain();
            for (const Label& l : dom) {
                if (pos >= in.size() || in[pos] != l)
                    throw TypeError("gate '" + c.gate_type().name() +
                                    "' does not fit at layer " +
                                    std::to_string(layer_index) + ", position " +
                                    std::to_string(pos));
                ++pos;
            }
            const Word& cod = c.gate_type().codomain();
            out.insert(out.end(), cod.begin(), cod.end());
        }
    }
    if (pos != in.size())
        throw TypeError("layer " + std::to_string(layer_index) +
                        " consumes " + std::to_string(pos) + " of " +
                        std::to_string(in.size()) + " wires");
    return out;
}

}  // namespace

Diagram Diagram::identity(Word w) { return Diagram(w, w, {}); }

Diagram Diagram::from_gate(GateType g) {
    Word in = g.domain(), out = g.codomain();
    return Diagram(std::move(in), std::move(out), {{Cell::gate(std::move(g))}});
}

Diagram Diagram::from_parts(Word input, std::vector<Layer> layers) {
    Word cur = input;
    for (std::size_t i = 0; i < layers.size(); ++i)
        cur = layer_output(cur, layers[i], i);
    return Diagram(std::move(input), std::move(cur), std::move(layers));
}

void Diagram::validate() const {
    Word cur = input_;
    for (std::size_t i = 0; i < layers_.size(); ++i)
        cur = layer_output(cur, layers_[i], i);
    if (cur != output_)
        throw TypeError("cached output word does not match the typing chain");
}

std::string Diagram::key() const {
    std::string out;
    auto put = [&out](std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    auto put_label = [&](const Label& l) {
        out.push_back(static_cast<char>(l.kind()));
        put(l.is_logical() ? l.formula().hash() : 0);
    };
    for (const Label& l : input_)
        put_label(l);
    for (const Layer& layer : layers_) {
        out.push_back('|');
        for (const Cell& c : layer) {
            if (c.is_wire()) {
                out.push_back('w');
                put_label(c.label());
            } else {
                out.push_back('g');
                put(c.gate_type().hash());
            }
        }
    }
    return out;
}

std::size_t Diagram::cell_count() const {
    std::size_t n = 0;
    for (const Layer& l : layers_)
        n += l.size();
    return n;
}

Diagram compose_seq(const Diagram& lower, const Diagram& upper) {
    if (lower.output() != upper.input()) {
        std::size_t pos = 0;
        std::size_t n = std::min(lower.output().size(), upper.input().size());
        while (pos < n && lower.output()[pos] == upper.input()[pos])
            ++pos;
        throw TypeError("sequential composition boundary mismatch: " +
                        print_word(lower.output()) + " vs " +
                        print_word(upper.input()) + ", first difference at position " +
                        std::to_string(pos));
    }
    std::vector<Layer> layers = lower.layers();
    layers.insert(layers.end(), upper.layers().begin(), upper.layers().end());
    return Diagram::from_parts(lower.input(), std::move(layers));
}

Diagram compose_par(const Diagram& left, const Diagram& right) {
    std::size_t depth = std::max(left.depth(), right.depth());
    std::vector<Layer> layers(depth);
    auto emit = [&](const Diagram& d) {
        std::size_t pad = depth - d.depth();
        for (std::size_t i = 0; i < depth; ++i) {
            Layer& out = layers[i];
            if (i < pad) {
                for (const Label& l : d.input())
                    out.push_back(Cell::wire(l));
            } else {
                const Layer& src = d.layers()[i - pad];
                out.insert(out.end(), src.begin(), src.end());
            }
        }
    };
    emit(left);
    emit(right);
    return Diagram::from_parts(concat(left.input(), right.input()), std::move(layers));
}

// --- Canonical form -------------------------------------------------------

namespace {

struct Cover {
    bool ok = false;
    std::size_t cell_first = 0;  // first covered cell / insertion index
    std::size_t mapped = 0;      // span start (or gap) on the far side
};

// Wires of `layer` covering output span [s, s+len), mapped to input
// coordinates. len == 0 probes a gap; a gap blocked by a multi-output gate
// reports failure. Zero-output cells sitting exactly at a gap count as
// coming after it, so freshly descending 0-ary gates land on their left.
Cover cover_by_output(const Layer& layer, std::size_t s, std::size_t len) {
    Cover r;
    std::size_t in_pos = 0, out_pos = 0, idx = 0;
    if (len == 0) {
        for (const Cell& c : layer) {
            std::size_t o1 = out_pos, o2 = out_pos + c.width_out();
            if (o1 < s && s < o2)
                return r;
            bool before = o2 < s || (o2 == s && c.width_out() > 0);
            if (!before)
                break;
            in_pos += c.width_in();
            out_pos = o2;
            ++idx;
        }
        r.ok = true;
        r.cell_first = idx;
        r.mapped = in_pos;
        return r;
    }
    // skip cells entirely left of the span
    while (idx < layer.size() && out_pos + layer[idx].width_out() <= s) {
        in_pos += layer[idx].width_in();
        out_pos += layer[idx].width_out();
        ++idx;
    }
    r.cell_first = idx;
    r.mapped = in_pos;
    std::size_t covered = out_pos;
    while (covered < s + len) {
        if (idx >= layer.size())
            return r;  // ran off the layer; malformed span
        const Cell& c = layer[idx];
        if (c.is_gate())
            return r;
        covered += 1;
        ++idx;
    }
    r.ok = true;
    return r;
}

// Mirror of cover_by_output: wires covering an *input* span, mapped to
// output coordinates. Zero-input cells at a probed gap count as after it.
Cover cover_by_input(const Layer& layer, std::size_t s, std::size_t len) {
    Cover r;
    std::size_t in_pos = 0, out_pos = 0, idx = 0;
    if (len == 0) {
        for (const Cell& c : layer) {
            std::size_t i1 = in_pos, i2 = in_pos + c.width_in();
            if (i1 < s && s < i2)
                return r;
            bool before = i2 < s || (i2 == s && c.width_in() > 0);
            if (!before)
                break;
            in_pos = i2;
            out_pos += c.width_out();
            ++idx;
        }
        r.ok = true;
        r.cell_first = idx;
        r.mapped = out_pos;
        return r;
    }
    while (idx < layer.size() && in_pos + layer[idx].width_in() <= s) {
        in_pos += layer[idx].width_in();
        out_pos += layer[idx].width_out();
        ++idx;
    }
    r.cell_first = idx;
    r.mapped = out_pos;
    std::size_t covered = in_pos;
    while (covered < s + len) {
        if (idx >= layer.size())
            return r;
        const Cell& c = layer[idx];
        if (c.is_gate())
            return r;
        covered += 1;
        ++idx;
    }
    r.ok = true;
    return r;
}

// Layered diagram under construction; gates sink to the lowest layer the
// interchange rule allows as they are inserted.
struct CanonBuilder {
    Word input;
    Word output;
    std::vector<Layer> layers;

    explicit CanonBuilder(Word in) : input(in), output(std::move(in)) {}

    void insert(const GateType& g, std::size_t s) {
        const std::size_t win = g.domain().size();
        const std::size_t wout = g.codomain().size();

        struct Step {
            std::size_t layer, cell_first;
        };
        std::vector<Step> passed;
        std::size_t rest = layers.size();
        std::size_t span = s;
        for (std::size_t i = layers.size(); i-- > 0;) {
            Cover c = cover_by_output(layers[i], span, win);
            if (!c.ok)
                break;
            passed.push_back({i, c.cell_first});
            rest = i;
            span = c.mapped;
        }

        if (rest == layers.size()) {
            Layer top;
            top.reserve(output.size() - win + 1);
            for (std::size_t p = 0; p < s; ++p)
                top.push_back(Cell::wire(output[p]));
            top.push_back(Cell::gate(g));
            for (std::size_t p = s + win; p < output.size(); ++p)
                top.push_back(Cell::wire(output[p]));
            layers.push_back(std::move(top));
        } else {
            for (const Step& st : passed) {
                Layer& layer = layers[st.layer];
                auto first = layer.begin() + st.cell_first;
                layer.erase(first, first + win);
                if (st.layer == rest) {
                    layer.insert(layer.begin() + st.cell_first, Cell::gate(g));
                } else {
                    std::vector<Cell> wires;
                    wires.reserve(wout);
                    for (const Label& l : g.codomain())
                        wires.push_back(Cell::wire(l));
                    layer.insert(layer.begin() + st.cell_first, wires.begin(),
                                 wires.end());
                }
            }
        }

        output.erase(output.begin() + s, output.begin() + s + win);
        output.insert(output.begin() + s, g.codomain().begin(), g.codomain().end());
    }
};

}  // namespace

Diagram canonical_form(const Diagram& d) {
    CanonBuilder b(d.input());
    for (const Layer& layer : d.layers()) {
        std::ptrdiff_t delta = 0;
        std::size_t pos = 0;
        for (const Cell& c : layer) {
            if (c.is_wire()) {
                ++pos;
                continue;
            }
            const GateType& g = c.gate_type();
            b.insert(g, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(pos) + delta));
            delta += static_cast<std::ptrdiff_t>(g.codomain().size()) -
                     static_cast<std::ptrdiff_t>(g.domain().size());
            pos += g.domain().size();
        }
    }
    Diagram out = Diagram::from_parts(std::move(b.input), std::move(b.layers));
    if (out.output() != d.output())
        throw TypeError("canonical form changed the output boundary");
    return out;
}

bool equal_mod_interchange(const Diagram& a, const Diagram& b) {
    if (a.input() != b.input() || a.output() != b.output())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::size_t gate_count(const Diagram& d) {
    std::size_t n = 0;
    for (const Layer& l : d.layers())
        for (const Cell& c : l)
            n += c.is_gate();
    return n;
}

std::size_t gate_count(const Diagram& d, const std::set<std::string>& names) {
    std::size_t n = 0;
    for (const Layer& l : d.layers())
        for (const Cell& c : l)
            if (c.is_gate() && names.count(c.gate_type().name()))
                ++n;
    return n;
}

// --- Parallel decomposition -----------------------------------------------

namespace {

struct Dsu {
    std::vector<std::size_t> parent;
    std::size_t add() {
        parent.push_back(parent.size());
        return parent.size() - 1;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::pair<Diagram, Diagram> decompose_parallel(const Diagram& d,
                                               std::size_t output_split) {
    if (!d.input().empty())
        throw TypeError("decompose_parallel requires an empty input word");
    if (output_split > d.output().size())
        throw Error("output split index out of range");

    // Component per gate occurrence; strands carry their producer's id.
    Dsu dsu;
    std::vector<std::size_t> strand;  // producer gate id per current position
    std::vector<std::vector<std::size_t>> cell_gate(d.depth());  // per-cell gate ids
    for (std::size_t li = 0; li < d.depth(); ++li) {
        const Layer& layer = d.layers()[li];
        std::vector<std::size_t> next;
        cell_gate[li].reserve(layer.size());
        std::size_t pos = 0;
        for (const Cell& c : layer) {
            if (c.is_wire()) {
                cell_gate[li].push_back(strand[pos]);
                next.push_back(strand[pos]);
                ++pos;
            } else {
                std::size_t id = dsu.add();
                cell_gate[li].push_back(id);
                for (std::size_t k = 0; k < c.width_in(); ++k)
                    dsu.unite(id, strand[pos++]);
                for (std::size_t k = 0; k < c.width_out(); ++k)
                    next.push_back(id);
            }
        }
        strand = std::move(next);
    }

    std::set<std::size_t> left_roots, right_roots;
    for (std::size_t j = 0; j < d.output().size(); ++j) {
        std::size_t root = dsu.find(strand[j]);
        (j < output_split ? left_roots : right_roots).insert(root);
    }
    for (std::size_t r : left_roots)
        if (right_roots.count(r))
            throw TypeError(
                "not decomposable: a connected component spans the output split");

    // Components with no output wire: pin their side by the planar order.
    std::map<std::size_t, int> orphan_side;  // -1 left, +1 right
    for (std::size_t li = 0; li < d.depth(); ++li) {
        const std::vector<std::size_t>& ids = cell_gate[li];
        bool seen_right = false;
        std::vector<char> left_after(ids.size(), 0);
        bool acc = false;
        for (std::size_t i = ids.size(); i-- > 0;) {
            left_after[i] = acc;
            acc = acc || left_roots.count(dsu.find(ids[i]));
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            std::size_t root = dsu.find(ids[i]);
            bool is_left = left_roots.count(root);
            bool is_right = right_roots.count(root);
            if (is_left || is_right) {
                seen_right = seen_right || is_right;
                continue;
            }
            int want = seen_right ? 1 : (left_after[i] ? -1 : 0);
            auto it = orphan_side.find(root);
            if (it == orphan_side.end()) {
                if (want != 0)
                    orphan_side[root] = want;
            } else if (want != 0 && it->second != want) {
                throw TypeError("not decomposable: component order is inconsistent");
            }
        }
    }

    auto side_of = [&](std::size_t root) {
        if (left_roots.count(root))
            return -1;
        if (right_roots.count(root))
            return 1;
        auto it = orphan_side.find(root);
        return it == orphan_side.end() ? -1 : it->second;
    };

    std::vector<Layer> left_layers, right_layers;
    for (std::size_t li = 0; li < d.depth(); ++li) {
        Layer l, r;
        const Layer& layer = d.layers()[li];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            int side = side_of(dsu.find(cell_gate[li][i]));
            (side < 0 ? l : r).push_back(layer[i]);
        }
        if (!l.empty())
            left_layers.push_back(std::move(l));
        if (!r.empty())
            right_layers.push_back(std::move(r));
    }
    Diagram left = Diagram::from_parts({}, std::move(left_layers));
    Diagram right = Diagram::from_parts({}, std::move(right_layers));
    if (left.output() != subword(d.output(), 0, output_split))
        throw TypeError("parallel decomposition produced a wrong left boundary");
    return {std::move(left), std::move(right)};
}

// --- Last gates and peeling -----------------------------------------------

namespace {

struct Reach {
    // For each level i (word between layer i-1 and i), the final output
    // position each wire / gap flows to through wires only.
    std::vector<std::vector<std::optional<std::size_t>>> wire;
    std::vector<std::vector<std::optional<std::size_t>>> gap;
};

Reach compute_reach(const Diagram& d) {
    std::size_t depth = d.depth();
    Reach r;
    r.wire.resize(depth + 1);
    r.gap.resize(depth + 1);
    std::size_t out_n = d.output().size();
    r.wire[depth].resize(out_n);
    r.gap[depth].resize(out_n + 1);
    for (std::size_t p = 0; p < out_n; ++p)
        r.wire[depth][p] = p;
    for (std::size_t g = 0; g <= out_n; ++g)
        r.gap[depth][g] = g;

    for (std::size_t li = depth; li-- > 0;) {
        const Layer& layer = d.layers()[li];
        const auto& wire_out = r.wire[li + 1];
        const auto& gap_out = r.gap[li + 1];
        std::size_t in_n = 0;
        for (const Cell& c : layer)
            in_n += c.width_in();
        auto& wire_in = r.wire[li];
        auto& gap_in = r.gap[li];
        wire_in.assign(in_n, std::nullopt);
        gap_in.assign(in_n + 1, std::nullopt);
        std::size_t in_pos = 0, out_pos = 0;
        for (const Cell& c : layer) {
            gap_in[in_pos] = gap_out[out_pos];
            if (c.is_wire())
                wire_in[in_pos] = wire_out[out_pos];
            in_pos += c.width_in();
            out_pos += c.width_out();
        }
        gap_in[in_pos] = gap_out[out_pos];
    }
    return r;
}

}  // namespace

std::vector<std::pair<GateOccurrence, std::size_t>> last_gates(const Diagram& d) {
    Reach reach = compute_reach(d);
    std::vector<std::pair<GateOccurrence, std::size_t>> out;
    for (std::size_t li = 0; li < d.depth(); ++li) {
        const Layer& layer = d.layers()[li];
        std::size_t in_pos = 0, out_pos = 0;
        for (std::size_t ci = 0; ci < layer.size(); ++ci) {
            const Cell& c = layer[ci];
            if (c.is_gate()) {
                std::size_t wout = c.width_out();
                std::optional<std::size_t> offset;
                if (wout == 0) {
                    offset = reach.gap[li + 1][out_pos];
                } else {
                    offset = reach.wire[li + 1][out_pos];
                    for (std::size_t k = 1; k < wout && offset; ++k)
                        if (!reach.wire[li + 1][out_pos + k])
                            offset.reset();
                }
                if (offset)
                    out.push_back({GateOccurrence{li, ci, in_pos}, *offset});
            }
            in_pos += c.width_in();
            out_pos += c.width_out();
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second < b.second;
    });
    return out;
}

Diagram peel_gate(const Diagram& d, const GateOccurrence& occ) {
    if (occ.layer >= d.depth() || occ.cell >= d.layers()[occ.layer].size())
        throw Error("gate occurrence out of range");
    const Cell& cell = d.layers()[occ.layer][occ.cell];
    if (!cell.is_gate())
        throw Error("peel target is not a gate");
    const GateType g = cell.gate_type();
    const std::size_t win = g.domain().size();
    const std::size_t wout = g.codomain().size();

    std::size_t out_pos = 0;
    for (std::size_t i = 0; i < occ.cell; ++i)
        out_pos += d.layers()[occ.layer][i].width_out();

    std::vector<Layer> layers = d.layers();

    // Replace the gate by its domain wires.
    {
        Layer& layer = layers[occ.layer];
        layer.erase(layer.begin() + occ.cell);
        std::vector<Cell> wires;
        for (const Label& l : g.domain())
            wires.push_back(Cell::wire(l));
        layer.insert(layer.begin() + occ.cell, wires.begin(), wires.end());
    }

    // Re-thread every layer above along the gate's output trace.
    std::size_t span = out_pos;
    for (std::size_t li = occ.layer + 1; li < d.depth(); ++li) {
        Cover c = cover_by_input(d.layers()[li], span, wout);
        if (!c.ok)
            throw TypeError("peel target is not a last gate");
        Layer& layer = layers[li];
        auto first = layer.begin() + c.cell_first;
        layer.erase(first, first + wout);
        std::vector<Cell> wires;
        for (const Label& l : g.domain())
            wires.push_back(Cell::wire(l));
        layer.insert(layer.begin() + c.cell_first, wires.begin(), wires.end());
        span = c.mapped;
    }

    return canonical_form(Diagram::from_parts(d.input(), std::move(layers)));
}

}  // namespace proofdiag
