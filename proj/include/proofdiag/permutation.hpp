#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "proofdiag/diagram.hpp"

namespace proofdiag {

/// A bijection on {1..n} in one-line notation: images[i-1] = sigma(i).
class Permutation {
public:
    /// Validates bijectivity; throws Error otherwise.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    /// Swaps k and k+1 (1-based), fixing everything else.
    static Permutation transposition(std::size_t n, std::size_t k);

    std::size_t size() const { return images_.size(); }
    /// sigma(i), 1-based.
    std::size_t operator()(std::size_t i) const { return images_[i - 1]; }
    const std::vector<std::size_t>& images() const { return images_; }

    /// this after first: (r)(i) = this(first(i)).
    Permutation compose(const Permutation& first) const;
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    bool is_identity() const;

    /// Repositioning action: out[sigma(i)-1] = in[i-1].
    template <typename T>
    std::vector<T> apply(const std::vector<T>& in) const {
        std::vector<T> out(in);
        for (std::size_t i = 1; i <= size(); ++i)
            out[images_[i - 1] - 1] = in[i - 1];
        return out;
    }

    /// External one-line format: "perm(3 1 2)".
    std::string to_string() const;
    static Permutation parse(std::string_view text);

private:
    std::vector<std::size_t> images_;
};

/// Removes the first point: the result acts on {1..n} the way sigma acts on
/// {2..n+1}, with images renumbered around sigma(1).
Permutation erase_first(const Permutation& sigma);

/// Single-layer diagram swapping wires k and k+1 (1-based). Throws Error
/// when either label is a non-twisting control color.
Diagram transposition_diagram(const Word& w, std::size_t k);

/// Stack of adjacent transpositions routing wire 1 to position n.
Diagram ladder_left(const Word& w);
/// Stack of adjacent transpositions routing wire n to position 1.
Diagram ladder_right(const Word& w);

/// The unique swap-normal-form diagram realizing sigma on the given word,
/// built by the ladder recursion. Returned in canonical form.
Diagram canonical_perm_diagram(const Permutation& sigma, const Word& w);

/// Traces each input wire to its output position. Every gate must be a
/// twisting operator; otherwise throws Error.
Permutation diagram_to_permutation(const Diagram& d);

/// The swap gate type on a pair of twisting labels.
GateType swap_gate(const Label& a, const Label& b);

}  // namespace proofdiag
