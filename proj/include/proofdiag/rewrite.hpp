#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "proofdiag/diagram.hpp"
#include "proofdiag/polygraph.hpp"

namespace proofdiag {

/// One replay step of a rewrite trace.
struct TraceStep {
    std::string rule;
    std::size_t layer = 0;
    std::size_t offset = 0;
};

/// An occurrence of a rule's left side inside a diagram, found modulo
/// interchange. Always refers to the canonical form of the target; applying
/// it to anything else raises a stale-match error.
struct Match {
    std::string rule;
    RuleFamily family = RuleFamily::Naturality;
    std::size_t anchor_layer = 0;
    std::size_t anchor_offset = 0;
    Diagram lhs, rhs;                      ///< instantiated rule sides
    std::vector<std::size_t> gates;        ///< matched gate ids, pattern order
    std::vector<std::size_t> in_strands;   ///< strands bound to the lhs input
    std::vector<std::size_t> out_strands;  ///< strands bound to the lhs output
    std::string target_key;                ///< canonical key of the matched diagram
};

/// All occurrences of the rule's left side, anchored on its first gate and
/// grown along internal wires. Sorted by (layer, offset, rule).
std::vector<Match> find_redexes(const Diagram& d, const RewriteRule& rule);

/// Schema-driven search over every rule family of the polygraph.
std::vector<Match> find_all_redexes(const Diagram& d, const Polygraph& p);

/// Restricted to the twisting relations (cut = false) or the cut-elimination
/// and unit rules (cut = true).
std::vector<Match> find_family_redexes(const Diagram& d, const Polygraph& p,
                                       bool cut_families);

/// Replaces the matched left side with the rule's right side inside the
/// recorded context. The result is canonical and keeps both boundary words.
Diagram apply(const Diagram& d, const Match& m);

enum class Strategy { LeftmostInnermost, Random };

struct NormalizeResult {
    Diagram diagram;
    std::vector<TraceStep> trace;
    bool budget_exhausted = false;
};

NormalizeResult normalize(const Diagram& d, const Polygraph& p, std::size_t budget);
NormalizeResult normalize(const Diagram& d, const Polygraph& p, std::size_t budget,
                          Strategy strategy, std::uint64_t seed);

/// The five minimal overlaps of the permutation polygraph's two rules,
/// built over a twisting word of two to four wires.
struct CriticalPeak {
    Diagram peak;
    Match first, second;
};
std::vector<CriticalPeak> critical_peaks_s(const Polygraph& s);

/// Whether the two one-step reducts of the peak reach a common normal form
/// within the budget (breadth-first over reduction sequences).
bool check_joinable(const Diagram& peak, const Match& m1, const Match& m2,
                    const Polygraph& p, std::size_t budget);

/// Monotone interpretation of twisting diagrams; entries stay positive.
using InterpVector = std::vector<long long>;
InterpVector interp_eval(const Diagram& d, const InterpVector& input);

/// Sampled evidence that the rule's interpretation strictly decreases:
/// pointwise >= with at least one strict coordinate, on `samples` random
/// positive vectors plus every corner of {1,100}^n.
bool check_decrease(const RewriteRule& rule, std::size_t samples,
                    std::uint64_t seed = 7);

enum class Equivalence { Yes, No, Unknown };

/// Bidirectional breadth-first search over the twisting-relation rewrite
/// graph, rules used in both orientations, states keyed by canonical form.
/// Exhausting both reachable sets (within a small gate-count headroom)
/// without meeting yields No; running out of budget yields Unknown.
Equivalence twist_equivalent(const Diagram& a, const Diagram& b, const Polygraph& p,
                             std::size_t budget);

struct CutElimResult {
    Diagram diagram;
    std::vector<TraceStep> trace;
    bool budget_exhausted = false;
};

/// Removes every cut gate: cut-elimination rules first, interleaved with
/// twisting steps that expose their redexes, plus the rerouting rule for a
/// cut meeting an axiom through a ladder of crossings (instantiated on
/// demand for the configuration at hand).
CutElimResult cut_eliminate(const Diagram& d, const Polygraph& p, std::size_t budget);

}  // namespace proofdiag
