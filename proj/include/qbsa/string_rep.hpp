#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qbsa/biserial.hpp"
#include "qbsa/quiver.hpp"

namespace qbsa {

/// True iff w is reduced and no generator of J, read forwards or as the
/// inverse word, occurs as a contiguous block.
bool is_string(const StringQuotient& sq, const Walk& w);

/// Pattern-matching automaton over signed letters. A state is the last
/// letter read together with the progress made toward every forbidden
/// pattern (the generators of J and their inverses); dead states are
/// dropped, so every path through the automaton spells a string.
class LetterAutomaton {
 public:
  explicit LetterAutomaton(const StringQuotient& sq);

  struct State {
    Letter last;
    std::size_t node;  // trie node of the longest live pattern prefix

    bool operator==(const State&) const = default;
  };

  const Quiver& quiver() const noexcept { return *quiver_; }
  std::size_t num_letters() const noexcept { return 2 * quiver_->num_arrows(); }
  std::size_t num_nodes() const noexcept { return next_.size() / num_letters(); }
  std::size_t max_pattern_length() const noexcept { return max_pattern_; }

  /// States reached by reading one letter from the empty word.
  std::vector<State> initial_states() const;
  std::vector<State> successors(const State& s) const;
  /// Advances by `l`, or nothing if that would cancel or complete a pattern.
  std::optional<State> step(const State& s, Letter l) const;

 private:
  static std::size_t code(Letter l) { return 2 * index(l.arrow) + (l.inverse ? 1 : 0); }

  const Quiver* quiver_;
  std::vector<std::size_t> next_;  // goto function, node * letters + code
  std::vector<bool> dead_;
  std::size_t max_pattern_ = 0;
};

/// A primitive cyclically reduced walk with letters of both signs whose
/// powers and rotations are all strings.
struct Band {
  Walk word;
};

/// True iff w satisfies every band condition.
bool is_band(const StringQuotient& sq, const Walk& w);

/// The least rotation of w or w^-1 in letter order.
Walk canonical_cyclic_word(const Quiver& q, const Walk& w);

/// A band of least length, the least such in canonical order; nothing when
/// (Q, J) has no band.
std::optional<Band> find_band(const StringQuotient& sq);

struct RepFiniteVerdict {
  bool rep_finite = true;
  std::optional<Band> witness;
};

RepFiniteVerdict rep_finite_verdict(const ValidatedPresentation& vp);

}  // namespace qbsa
