#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isingbraid/group.hpp"
#include "isingbraid/rep.hpp"

namespace ising {

/// A braid-word program: letter +k is generator k, -k its inverse.
/// Evaluation multiplies matrices in reading order, so the rightmost
/// letter acts first on states.
struct BraidWord {
  RepSpec spec;
  std::vector<int> letters;
};

/// Whitespace-separated signed integers, e.g. "-3 4 3 1 5 4 -3".
BraidWord parse_word(const RepSpec& spec, const std::string& text);
std::string format_word(const BraidWord& word);

/// Exact product of the spec's generators and inverses.
CMatrix evaluate_word(const BraidWord& word);

/// Phase lambda with evaluate_word(word) = lambda * target (lambda = 1 and
/// exact equality when up_to_phase is false); nullopt on mismatch.
std::optional<Cyclo> verify_gate(const BraidWord& word, const CMatrix& target,
                                 bool up_to_phase);

/// Remove adjacent (+k, -k) / (-k, +k) pairs; evaluation-invariant.
BraidWord reduce_word(const BraidWord& word);

struct SynthesisResult {
  BraidWord word;
  Cyclo phase;            // target reached as phase^-1 * evaluation
  std::size_t explored;   // distinct states visited
  bool minimal;           // produced by breadth-first layers
};

/// Breadth-first search over the image's Cayley graph for a shortest word
/// evaluating to the target (up to a unit phase when requested).  States
/// are matrices deduplicated by canonical key, phase-gauged in phase mode.
/// Ties between same-length words resolve to the lexicographically smallest
/// letter sequence under +1 < -1 < +2 < -2 < ...  Returns nullopt when the
/// target is unreachable within max_len (or at all, once the image closes).
std::optional<SynthesisResult> synthesize(const RepSpec& spec,
                                          const CMatrix& target, int max_len,
                                          bool up_to_phase,
                                          std::size_t state_limit = 10'000'000);

}  // namespace ising
