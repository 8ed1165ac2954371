#include "qbsa/string_rep.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "qbsa/error.hpp"

namespace qbsa {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<Letter>> forbidden_patterns(const StringQuotient& sq) {
  std::vector<std::vector<Letter>> out;
  for (const Path& g : sq.generators) {
    std::vector<Letter> fwd, inv;
    for (ArrowId a : g.arrows()) fwd.push_back({a, false});
    for (auto it = g.arrows().rbegin(); it != g.arrows().rend(); ++it) inv.push_back({*it, true});
    out.push_back(std::move(fwd));
    out.push_back(std::move(inv));
  }
  return out;
}

std::size_t longest_generator(const StringQuotient& sq) {
  std::size_t n = 0;
  for (const Path& g : sq.generators) n = std::max(n, g.length());
  return n;
}

Walk walk_from(const Quiver& q, PointId at, std::vector<Letter> letters) {
  if (letters.empty()) return Walk::trivial(at);
  return Walk::of(q, std::move(letters));
}

Walk rotate_walk(const Quiver& q, const Walk& w, std::size_t j) {
  std::vector<Letter> ls = w.letters();
  std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(j % ls.size()), ls.end());
  return Walk::of(q, std::move(ls));
}

Walk power_walk(const Walk& w, std::size_t k) {
  Walk out = Walk::trivial(w.source());
  for (std::size_t i = 0; i < k; ++i) out = out.then(w);
  return out;
}

// Shortest d dividing n with w equal to its rotation by d.
std::size_t primitive_period(const std::vector<Letter>& ls) {
  const std::size_t n = ls.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = ls[i] == ls[i - d];
    if (periodic) return d;
  }
  return n;
}

}  // namespace

bool is_string(const StringQuotient& sq, const Walk& w) {
  if (!w.is_reduced()) return false;
  const auto& ls = w.letters();
  for (const auto& pat : forbidden_patterns(sq))
    if (std::search(ls.begin(), ls.end(), pat.begin(), pat.end()) != ls.end()) return false;
  return true;
}

LetterAutomaton::LetterAutomaton(const StringQuotient& sq) : quiver_(&sq.quiver) {
  const std::size_t L = num_letters();
  const auto patterns = forbidden_patterns(sq);
  max_pattern_ = longest_generator(sq);

  // Trie with explicit children, then fail links turn it into a goto table.
  std::vector<std::vector<std::size_t>> child(1, std::vector<std::size_t>(L, kNone));
  std::vector<bool> terminal(1, false);
  for (const auto& pat : patterns) {
    std::size_t node = 0;
    for (const Letter& l : pat) {
      const std::size_t c = code(l);
      if (child[node][c] == kNone) {
        child[node][c] = child.size();
        child.emplace_back(L, kNone);
        terminal.push_back(false);
      }
      node = child[node][c];
    }
    terminal[node] = true;
  }
  const std::size_t n = child.size();
  next_.assign(n * L, 0);
  dead_ = terminal;
  std::vector<std::size_t> fail_link(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t c = 0; c < L; ++c) {
    if (child[0][c] == kNone) continue;
    next_[c] = child[0][c];
    queue.push_back(child[0][c]);
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    dead_[u] = dead_[u] || dead_[fail_link[u]];
    for (std::size_t c = 0; c < L; ++c) {
      const std::size_t v = child[u][c];
      if (v == kNone) {
        next_[u * L + c] = next_[fail_link[u] * L + c];
      } else {
        fail_link[v] = next_[fail_link[u] * L + c];
        next_[u * L + c] = v;
        queue.push_back(v);
      }
    }
  }
}

std::optional<LetterAutomaton::State> LetterAutomaton::step(const State& s, Letter l) const {
  if (l.source(*quiver_) != s.last.target(*quiver_) || l == s.last.inverted()) return std::nullopt;
  const std::size_t node = next_[s.node * num_letters() + code(l)];
  if (dead_[node]) return std::nullopt;
  return State{l, node};
}

std::vector<LetterAutomaton::State> LetterAutomaton::initial_states() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < quiver_->num_arrows(); ++i) {
    for (bool inv : {false, true}) {
      const Letter l{arrow_at(i), inv};
      const std::size_t node = next_[code(l)];
      if (!dead_[node]) out.push_back({l, node});
    }
  }
  return out;
}

std::vector<LetterAutomaton::State> LetterAutomaton::successors(const State& s) const {
  std::vector<State> out;
  const PointId at = s.last.target(*quiver_);
  for (ArrowId a : quiver_->out_arrows(at))
    if (auto t = step(s, {a, false})) out.push_back(*t);
  for (ArrowId a : quiver_->in_arrows(at))
    if (auto t = step(s, {a, true})) out.push_back(*t);
  std::sort(out.begin(), out.end(), [](const State& x, const State& y) {
    return x.last != y.last ? x.last < y.last : x.node < y.node;
  });
  return out;
}

bool is_band(const StringQuotient& sq, const Walk& w) {
  const Quiver& q = sq.quiver;
  if (w.is_trivial() || !w.is_closed() || !w.is_reduced()) return false;
  const auto& ls = w.letters();
  if (ls.back() == ls.front().inverted()) return false;
  const bool direct = std::any_of(ls.begin(), ls.end(), [](Letter l) { return !l.inverse; });
  const bool inverse = std::any_of(ls.begin(), ls.end(), [](Letter l) { return l.inverse; });
  if (!direct || !inverse) return false;
  if (primitive_period(ls) != ls.size()) return false;
  // Powers long enough to straddle any generator across the seam.
  const std::size_t k = 2 + (longest_generator(sq) + ls.size() - 1) / ls.size();
  for (std::size_t j = 0; j < ls.size(); ++j)
    if (!is_string(sq, power_walk(rotate_walk(q, w, j), k))) return false;
  return true;
}

Walk canonical_cyclic_word(const Quiver& q, const Walk& w) {
  if (w.is_trivial()) return w;
  Walk best = w;
  for (const Walk& base : {w, w.inverse()})
    for (std::size_t j = 0; j < base.length(); ++j) {
      Walk r = rotate_walk(q, base, j);
      if (r.letters() < best.letters()) best = r;
    }
  return best;
}

std::optional<Band> find_band(const StringQuotient& sq) {
  const Quiver& q = sq.quiver;
  if (q.num_arrows() == 0) return std::nullopt;
  LetterAutomaton aut(sq);
  const std::size_t nodes = aut.num_nodes();
  auto key = [&](const LetterAutomaton::State& s) {
    return (2 * index(s.last.arrow) + (s.last.inverse ? 1 : 0)) * nodes + s.node;
  };

  // Reachable states.
  std::vector<LetterAutomaton::State> states;
  std::vector<std::size_t> id(aut.num_letters() * nodes, kNone);
  std::deque<LetterAutomaton::State> queue;
  for (const auto& s : aut.initial_states()) {
    if (id[key(s)] != kNone) continue;
    id[key(s)] = states.size();
    states.push_back(s);
    queue.push_back(s);
  }
  std::vector<std::vector<std::size_t>> succ;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (const auto& t : aut.successors(s)) {
      if (id[key(t)] != kNone) continue;
      id[key(t)] = states.size();
      states.push_back(t);
      queue.push_back(t);
    }
  }
  succ.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    for (const auto& t : aut.successors(states[i])) succ[i].push_back(id[key(t)]);

  std::optional<Walk> best;
  for (std::size_t s = 0; s < states.size(); ++s) {
    // Shortest cycle through s.
    std::vector<std::size_t> parent(states.size(), kNone);
    std::vector<std::size_t> dist(states.size(), kNone);
    std::deque<std::size_t> bfs{s};
    dist[s] = 0;
    std::size_t closing = kNone;
    while (!bfs.empty() && closing == kNone) {
      const std::size_t u = bfs.front();
      bfs.pop_front();
      if (best && dist[u] + 1 > best->length()) break;
      for (std::size_t v : succ[u]) {
        if (v == s) {
          closing = u;
          break;
        }
        if (dist[v] != kNone) continue;
        dist[v] = dist[u] + 1;
        parent[v] = u;
        bfs.push_back(v);
      }
    }
    if (closing == kNone) continue;

    std::vector<Letter> letters;
    for (std::size_t u = closing; u != s; u = parent[u]) letters.push_back(states[u].last);
    letters.push_back(states[s].last);
    std::reverse(letters.begin(), letters.end());
    // The cycle enters s by reading s's letter; start the word right after it.
    std::rotate(letters.begin(), letters.begin() + 1, letters.end());
    letters.resize(primitive_period(letters));

    const bool direct = std::any_of(letters.begin(), letters.end(), [](Letter l) { return !l.inverse; });
    const bool inverse = std::any_of(letters.begin(), letters.end(), [](Letter l) { return l.inverse; });
    if (!direct || !inverse)
      fail(ErrorCode::InvariantViolation, "one-signed cycle in the string automaton (nilpotency fails)");

    Walk w = canonical_cyclic_word(q, walk_from(q, letters.front().source(q), letters));
    if (!is_band(sq, w)) continue;
    if (!best || w.length() < best->length() || (w.length() == best->length() && w.letters() < best->letters()))
      best = w;
  }
  if (!best) return std::nullopt;
  return Band{*best};
}

RepFiniteVerdict rep_finite_verdict(const ValidatedPresentation& vp) {
  RepFiniteVerdict out;
  out.witness = find_band(string_quotient(vp));
  out.rep_finite = !out.witness.has_value();
  return out;
}

}  // namespace qbsa
