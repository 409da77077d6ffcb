#include "bptk/andrews_curtis.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bptk/errors.hpp"
#include "bptk/parallel.hpp"

namespace bptk {

namespace {

using State = std::vector<Word>;

std::string state_key(const State& s) {
  std::string key;
  for (const auto& w : s) {
    for (const auto& syl : w.syllables()) {
      key += std::to_string(syl.gen);
      key += ':';
      key += std::to_string(syl.exp);
      key += ',';
    }
    key += '|';
  }
  return key;
}

// Distinct left rotations of a cyclically reduced word.
std::vector<std::uint64_t> distinct_rotations(const Word& w) {
  std::vector<std::uint64_t> out;
  if (w.empty()) {
    out.push_back(0);
    return out;
  }
  std::vector<Word> seen;
  for (std::uint64_t k = 0; k < w.length(); ++k) {
    Word r = w.rotated(k);
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) break;  // period reached
    seen.push_back(std::move(r));
    out.push_back(k);
  }
  return out;
}

struct Step {
  std::size_t i;  // index into the parent state
  std::size_t j;
  std::uint64_t rot_i;
  bool inverse_j;
  std::uint64_t rot_j;
};

struct Node {
  State state;
  std::size_t parent;
  Step step;
};

struct Candidate {
  State state;
  Step step;
};

std::vector<Candidate> expand(const State& s, std::uint64_t max_len) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto rots_i = distinct_rotations(s[i]);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i || s[j].empty()) continue;
      for (const bool inv : {false, true}) {
        const Word base = inv ? s[j].inverse() : s[j];
        const auto rots_j = distinct_rotations(base);
        for (const auto p : rots_i) {
          const Word left = s[i].rotated(p);
          for (const auto k : rots_j) {
            Word next = canonical_relator(left * base.rotated(k));
            if (next.length() > max_len) continue;
            State ns = s;
            ns[i] = std::move(next);
            std::sort(ns.begin(), ns.end());
            out.push_back({std::move(ns), {i, j, p, inv, k}});
          }
        }
      }
    }
  }
  return out;
}

// Moves turning concrete relator `r` into exactly `target`, which must be a
// cyclic rotation of the cyclic reduction of r or of r^-1.
void normalize_relator(Presentation& p, std::size_t idx, const Word& target, std::vector<AcMove>& moves) {
  auto emit = [&](const AcMove& m) {
    p = ac_move(p, m);
    moves.push_back(m);
  };
  for (const bool inv : {false, true}) {
    const Word r = inv ? p.relators()[idx].inverse() : p.relators()[idx];
    Word conj;
    const Word core = r.cyclically_reduced(&conj);
    if (core.length() != target.length()) continue;
    std::uint64_t q = 0;
    bool match = core.empty() && target.empty();
    for (; !match && q < core.length(); ++q) {
      if (core.rotated(q) == target) {
        match = true;
        break;
      }
    }
    if (!match) continue;
    if (inv) emit(AcMove::invert(idx));
    // u^-1 r u == target with u = conj * core[0, q)
    const Word u = conj * core.subword(0, q);
    for (const Letter l : u.letters()) emit(AcMove::conjugate(idx, l.inverted()));
    if (p.relators()[idx] != target) throw std::logic_error("ac_search: relator normalization failed");
    return;
  }
  throw std::logic_error("ac_search: relator is not conjugate to the expected canonical form");
}

// Concrete relator index whose canonical form equals `c`, not in `used`.
std::size_t find_concrete(const Presentation& p, const Word& c, const std::vector<std::size_t>& used) {
  for (std::size_t r = 0; r < p.num_relators(); ++r) {
    if (std::find(used.begin(), used.end(), r) != used.end()) continue;
    if (canonical_relator(p.relators()[r]) == c) return r;
  }
  throw std::logic_error("ac_search: canonical state does not match the concrete presentation");
}

}  // namespace

Presentation ac_move(const Presentation& p, const AcMove& move) {
  const auto n = p.num_relators();
  if (move.i >= n) throw std::out_of_range("ac_move: relator index " + std::to_string(move.i) + " out of range");
  auto rels = p.relators();
  switch (move.kind) {
    case AcMove::Kind::invert:
      rels[move.i] = rels[move.i].inverse();
      break;
    case AcMove::Kind::multiply:
      if (move.j >= n) throw std::out_of_range("ac_move: relator index " + std::to_string(move.j) + " out of range");
      if (move.j == move.i) throw std::invalid_argument("ac_move: multiply needs two distinct relators");
      rels[move.i] = rels[move.i] * rels[move.j];
      break;
    case AcMove::Kind::conjugate: {
      if (move.by.gen >= p.num_generators()) throw std::invalid_argument("ac_move: conjugating letter outside the alphabet");
      const Word g = Word::generator(move.by.gen, move.by.inverse ? -1 : 1);
      rels[move.i] = conjugate(rels[move.i], g);
      break;
    }
  }
  return Presentation(p.alphabet(), std::move(rels));
}

Presentation apply_moves(Presentation p, std::span<const AcMove> moves) {
  for (const auto& m : moves) p = ac_move(p, m);
  return p;
}

std::string to_string(const AcMove& move, const Alphabet& alphabet) {
  switch (move.kind) {
    case AcMove::Kind::invert:
      return "invert " + std::to_string(move.i);
    case AcMove::Kind::multiply:
      return "multiply " + std::to_string(move.i) + " " + std::to_string(move.j);
    case AcMove::Kind::conjugate:
      return "conjugate " + std::to_string(move.i) + " " + alphabet.render(move.by);
  }
  return {};
}

AcMove parse_ac_move(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  std::size_t i = 0;
  if (!(in >> i)) throw ParseError("AC move needs a relator index: \"" + std::string(text) + "\"");
  if (kind == "invert") return AcMove::invert(i);
  if (kind == "multiply") {
    std::size_t j = 0;
    if (!(in >> j)) throw ParseError("multiply needs two relator indices");
    return AcMove::multiply(i, j);
  }
  if (kind == "conjugate") {
    std::string g;
    if (!(in >> g) || g.size() != 1) throw ParseError("conjugate needs a single generator letter");
    return AcMove::conjugate(i, alphabet.letter(g[0]));
  }
  throw ParseError("unknown AC move \"" + kind + "\"");
}

Word canonical_relator(const Word& r) {
  const Word core = r.cyclically_reduced();
  if (core.empty()) return core;
  Word best = core;
  for (const Word& base : {core, core.inverse()}) {
    for (std::uint64_t k = 0; k < base.length(); ++k) {
      Word cand = base.rotated(k);
      if (cand < best) best = std::move(cand);
    }
  }
  return best;
}

std::vector<Word> canonical_relators(const Presentation& p) {
  std::vector<Word> out;
  out.reserve(p.num_relators());
  for (const auto& r : p.relators()) out.push_back(canonical_relator(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_up_to_cyclic_reduction(const Presentation& a, const Presentation& b) {
  return a.alphabet() == b.alphabet() && canonical_relators(a) == canonical_relators(b);
}

Presentation trivial_presentation(const Alphabet& alphabet) {
  std::vector<Word> rels;
  for (Gen g = 0; g < alphabet.size(); ++g) rels.push_back(Word::generator(g));
  return Presentation(alphabet, std::move(rels));
}

AcSearchResult ac_search(const Presentation& start, const Presentation& target, const AcSearchLimits& limits) {
  if (!start.balanced() || !target.balanced()) throw std::invalid_argument("ac_search: presentations must be balanced");
  if (!(start.alphabet() == target.alphabet())) throw std::invalid_argument("ac_search: presentations use different alphabets");

  AcSearchResult result;
  const State goal = canonical_relators(target);
  const std::string goal_key = state_key(goal);

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back({canonical_relators(start), 0, {}});
  seen.emplace(state_key(nodes[0].state), 0);

  std::optional<std::size_t> hit;
  if (state_key(nodes[0].state) == goal_key) hit = 0;

  std::vector<std::size_t> frontier{0};
  std::size_t depth = 0;
  result.reason = "exhausted";
  while (!hit && !frontier.empty()) {
    if (depth >= limits.max_depth) {
      result.reason = "max_depth";
      break;
    }
    std::vector<State> states;
    states.reserve(frontier.size());
    for (auto id : frontier) states.push_back(nodes[id].state);
    auto expansions = parallel_map(states, limits.threads,
                                   [&](const State& s) { return expand(s, limits.max_len); });
    std::vector<std::size_t> next;
    bool out_of_states = false;
    for (std::size_t f = 0; f < frontier.size() && !hit && !out_of_states; ++f) {
      for (auto& cand : expansions[f]) {
        auto key = state_key(cand.state);
        if (seen.count(key)) continue;
        if (nodes.size() >= limits.max_states) {
          out_of_states = true;
          break;
        }
        const auto id = nodes.size();
        nodes.push_back({std::move(cand.state), frontier[f], cand.step});
        seen.emplace(key, id);
        next.push_back(id);
        if (key == goal_key) {
          hit = id;
          break;
        }
      }
    }
    if (out_of_states) {
      result.reason = "max_states";
      break;
    }
    if (!hit) {
      ++depth;
      result.explored_depth = depth;
    }
    frontier = std::move(next);
  }
  result.states = nodes.size();
  if (!hit) return result;

  // Rebuild the path and lower each step to elementary moves.
  std::vector<std::size_t> path;
  for (std::size_t id = *hit; id != 0; id = nodes[id].parent) path.push_back(id);
  std::reverse(path.begin(), path.end());

  Presentation concrete = start;
  for (const auto id : path) {
    const State& parent = nodes[nodes[id].parent].state;
    const Step& step = nodes[id].step;
    const std::size_t ci = find_concrete(concrete, parent[step.i], {});
    const std::size_t cj = find_concrete(concrete, parent[step.j], {ci});
    const Word want_i = parent[step.i].rotated(step.rot_i);
    const Word want_j = (step.inverse_j ? parent[step.j].inverse() : parent[step.j]).rotated(step.rot_j);
    normalize_relator(concrete, ci, want_i, result.moves);
    normalize_relator(concrete, cj, want_j, result.moves);
    concrete = ac_move(concrete, AcMove::multiply(ci, cj));
    result.moves.push_back(AcMove::multiply(ci, cj));
  }
  if (!same_up_to_cyclic_reduction(concrete, target)) throw std::logic_error("ac_search: replayed sequence missed the target");
  result.found = true;
  result.depth = path.size();
  result.explored_depth = std::max(result.explored_depth, path.size());
  result.reason = "found";
  return result;
}

}  // namespace bptk
