#include "proofdiag/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "proofdiag/errors.hpp"

namespace proofdiag {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t v : images_) {
        if (v == 0 || v > images_.size() || seen[v - 1])
            throw Error("not a bijection on {1.." + std::to_string(images_.size()) +
                        "}: " + to_string());
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> im(n);
    for (std::size_t i = 0; i < n; ++i)
        im[i] = i + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::size_t k) {
    if (k < 1 || k >= n)
        throw Error("transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.images_[k - 1], p.images_[k]);
    return p;
}

Permutation Permutation::compose(const Permutation& first) const {
    if (size() != first.size())
        throw Error("composing permutations of different sizes");
    std::vector<std::size_t> im(size());
    for (std::size_t i = 1; i <= size(); ++i)
        im[i - 1] = (*this)(first(i));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> im(size());
    for (std::size_t i = 1; i <= size(); ++i)
        im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (images_[i] != i + 1)
            return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out = "perm(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(images_[i]);
    }
    return out + ")";
}

Permutation Permutation::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip();
    if (text.compare(pos, 5, "perm(") != 0)
        throw ParseError("expected 'perm('", pos);
    pos += 5;
    std::vector<std::size_t> images;
    for (;;) {
        skip();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a 1-based image or ')'", pos);
        std::size_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
        images.push_back(v);
    }
    skip();
    if (pos != text.size())
        throw ParseError("trailing input after permutation", pos);
    return Permutation(std::move(images));
}

Permutation erase_first(const Permutation& sigma) {
    if (sigma.size() < 1)
        throw Error("erase_first needs at least one point");
    std::size_t pivot = sigma(1);
    std::vector<std::size_t> im(sigma.size() - 1);
    for (std::size_t i = 1; i < sigma.size(); ++i) {
        std::size_t v = sigma(i + 1);
        im[i - 1] = v < pivot ? v : v - 1;
    }
    return Permutation(std::move(im));
}

GateType swap_gate(const Label& a, const Label& b) {
    if (!a.twisting() || !b.twisting())
        throw Error("cannot twist the non-twisting label " +
                    (a.twisting() ? b.to_string() : a.to_string()));
    return GateType::make("swap", {a.formula(), b.formula()}, {a, b}, {b, a}, true);
}

Diagram transposition_diagram(const Word& w, std::size_t k) {
    if (k < 1 || k >= w.size())
        throw Error("transposition index out of range for word of size " +
                    std::to_string(w.size()));
    Layer layer;
    for (std::size_t p = 0; p + 1 < k; ++p)
        layer.push_back(Cell::wire(w[p]));
    layer.push_back(Cell::gate(swap_gate(w[k - 1], w[k])));
    for (std::size_t p = k + 1; p < w.size(); ++p)
        layer.push_back(Cell::wire(w[p]));
    return Diagram::from_parts(w, {std::move(layer)});
}

Diagram ladder_left(const Word& w) {
    Diagram d = Diagram::identity(w);
    for (std::size_t k = 1; k < w.size(); ++k)
        d = compose_seq(d, transposition_diagram(d.output(), k));
    return d;
}

Diagram ladder_right(const Word& w) {
    Diagram d = Diagram::identity(w);
    for (std::size_t k = w.size(); k-- > 1;)
        d = compose_seq(d, transposition_diagram(d.output(), k));
    return d;
}

Diagram canonical_perm_diagram(const Permutation& sigma, const Word& w) {
    if (sigma.size() != w.size())
        throw Error("permutation size does not match the word");
    for (const Label& l : w)
        if (!l.twisting())
            throw Error("cannot permute the non-twisting label " + l.to_string());

    if (sigma.size() <= 1)
        return Diagram::identity(w);

    std::size_t k = sigma(1);
    Word tail = subword(w, 1, w.size() - 1);
    Diagram lower = compose_par(Diagram::identity(subword(w, 0, 1)),
                                canonical_perm_diagram(erase_first(sigma), tail));
    Diagram ladder = ladder_left(subword(lower.output(), 0, k));
    Diagram upper = compose_par(
        ladder, Diagram::identity(subword(lower.output(), k, w.size() - k)));
    return canonical_form(compose_seq(lower, upper));
}

Permutation diagram_to_permutation(const Diagram& d) {
    // cur[p] = index (1-based) of the input wire currently at position p
    std::vector<std::size_t> cur(d.input().size());
    for (std::size_t p = 0; p < cur.size(); ++p)
        cur[p] = p + 1;
    for (const Layer& layer : d.layers()) {
        std::size_t pos = 0;
        for (const Cell& c : layer) {
            if (c.is_wire()) {
                ++pos;
                continue;
            }
            if (!c.gate_type().twisting())
                throw Error("diagram contains the non-twisting gate '" +
                            c.gate_type().name() + "'");
            std::swap(cur[pos], cur[pos + 1]);
            pos += 2;
        }
    }
    std::vector<std::size_t> images(cur.size());
    for (std::size_t p = 0; p < cur.size(); ++p)
        images[cur[p] - 1] = p + 1;
    return Permutation(std::move(images));
}

}  // namespace proofdiag
