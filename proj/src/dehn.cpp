#include "bptk/dehn.hpp"

#include <deque>
#include <map>
#include <optional>
#include <limits>
#include <string_view>
#include <unordered_map>

#include "bptk/errors.hpp"
#include "bptk/parallel.hpp"
#include "bptk/tower.hpp"

namespace bptk {

namespace {

// Words inside the search are byte strings of letter codes; code ^ 1 is the
// inverse letter.
using Code = std::string;

Code encode(const Word& w) {
  Code out;
  out.reserve(w.length());
  for (const auto& s : w.syllables()) {
    const auto c = static_cast<char>(Letter{s.gen, s.exp < 0}.code());
    out.append(static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp), c);
  }
  return out;
}

Word decode(std::string_view code) {
  std::vector<Letter> letters;
  letters.reserve(code.size());
  for (char c : code) letters.push_back(Letter::from_code(static_cast<unsigned char>(c)));
  return Word::from_letters(letters);
}

// Freely reduced u[0, p) + piece + u[p, end); u must be freely reduced.
Code insert_reduce(std::string_view u, std::size_t p, std::string_view piece) {
  Code out(u.substr(0, p));
  out.reserve(u.size() + piece.size());
  for (char c : piece) {
    if (!out.empty() && out.back() == (c ^ 1)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  std::size_t q = p;
  while (q < u.size() && !out.empty() && out.back() == (u[q] ^ 1)) {
    out.pop_back();
    ++q;
  }
  out.append(u.substr(q));
  return out;
}

struct Insertable {
  std::size_t relator;
  bool inverse;
  std::uint64_t rotation;
  Code code;
};

std::vector<Insertable> insertables(const Presentation& p) {
  std::vector<Insertable> out;
  for (std::size_t r = 0; r < p.num_relators(); ++r) {
    for (const bool inv : {false, true}) {
      const Code base = encode(inv ? p.relators()[r].inverse() : p.relators()[r]);
      for (std::uint64_t k = 0; k < std::max<std::size_t>(base.size(), 1); ++k) {
        Code rot = base.substr(k) + base.substr(0, k);
        bool dup = false;
        for (const auto& e : out) dup = dup || e.code == rot;
        if (!dup) out.push_back({r, inv, k, std::move(rot)});
      }
    }
  }
  return out;
}

// Each insertion changes the exponent sum of generator g by at most
// max_k |e_g(r_k)|, which gives a consistent lower bound on the remaining
// number of insertions.
class ExponentSumBound {
 public:
  explicit ExponentSumBound(const Presentation& p) : step_(p.num_generators(), 0) {
    for (const auto& r : p.relators()) {
      std::vector<std::int64_t> e(p.num_generators(), 0);
      for (const auto& s : r.syllables()) e[s.gen] += s.exp;
      for (std::size_t g = 0; g < e.size(); ++g) step_[g] = std::max(step_[g], e[g] < 0 ? -e[g] : e[g]);
    }
  }

  // nullopt when some exponent sum can never be cancelled.
  std::optional<std::uint64_t> operator()(std::string_view code) const {
    std::vector<std::int64_t> e(step_.size(), 0);
    for (char c : code) {
      const auto l = Letter::from_code(static_cast<unsigned char>(c));
      e[l.gen] += l.inverse ? -1 : 1;
    }
    std::uint64_t h = 0;
    for (std::size_t g = 0; g < e.size(); ++g) {
      const auto a = static_cast<std::uint64_t>(e[g] < 0 ? -e[g] : e[g]);
      if (a == 0) continue;
      if (step_[g] == 0) return std::nullopt;
      h = std::max<std::uint64_t>(h, (a + static_cast<std::uint64_t>(step_[g]) - 1) / static_cast<std::uint64_t>(step_[g]));
    }
    return h;
  }

 private:
  std::vector<std::int64_t> step_;
};

struct Node {
  Code word;
  std::uint32_t parent;
  std::uint32_t insertable;
  std::uint64_t position;
  std::uint64_t g;
  bool closed = false;
};

struct Child {
  Code word;
  std::uint32_t insertable;
  std::uint64_t position;
  std::optional<std::uint64_t> h;
};

struct Entry {
  std::uint32_t id;
  std::uint64_t g;
};

}  // namespace

Word insert_relator(const Presentation& p, const Word& u, const DehnStep& step) {
  if (step.relator >= p.num_relators()) throw std::out_of_range("insert_relator: relator index out of range");
  if (step.position > u.length()) throw std::out_of_range("insert_relator: position past end of word");
  const Word& r = p.relators()[step.relator];
  const Code piece = encode((step.inverse ? r.inverse() : r).rotated(step.rotation));
  const Code code = encode(u);
  return decode(insert_reduce(code, step.position, piece));
}

// Best-first search ordered by insertions-so-far plus the exponent-sum
// bound. Buckets are processed in waves: a wave is expanded (possibly in
// parallel) and its children merged in wave order, so the outcome does not
// depend on the thread count.
DehnProbeResult dehn_probe(const Presentation& p, const Word& w, const DehnLimits& limits) {
  DehnProbeResult result;
  result.word = w;
  if (w.empty()) {
    result.applications = 0;
    result.states = 1;
    result.reason = "found";
    return result;
  }
  const auto pieces = insertables(p);
  const ExponentSumBound bound(p);

  std::deque<Node> nodes;
  std::unordered_map<std::string_view, std::uint32_t> seen;
  std::map<std::uint64_t, std::vector<Entry>> buckets;

  const Code start = encode(w);
  const auto h0 = bound(start);
  nodes.push_back({start, 0, 0, 0, 0});
  seen.emplace(nodes.back().word, 0);
  result.states = 1;
  result.reason = "exhausted";
  if (!h0) {
    result.capped = true;
    return result;
  }
  buckets[*h0].push_back({0, 0});

  std::optional<std::uint32_t> goal;
  bool out_of_states = false;
  while (!buckets.empty() && !out_of_states) {
    auto bucket = buckets.begin();
    const std::uint64_t f = bucket->first;
    if (goal && nodes[*goal].g <= f) break;
    std::vector<Entry> wave;
    wave.swap(bucket->second);
    buckets.erase(bucket);

    std::vector<std::uint32_t> batch;
    for (const auto& e : wave) {
      Node& n = nodes[e.id];
      if (n.closed || n.g != e.g) continue;
      n.closed = true;
      batch.push_back(e.id);
    }
    result.explored += batch.size();
    auto children = parallel_map(batch, limits.threads, [&](std::uint32_t id) {
      const std::string_view u = nodes[id].word;
      std::vector<Child> out;
      for (std::uint32_t k = 0; k < pieces.size(); ++k) {
        for (std::size_t pos = 0; pos <= u.size(); ++pos) {
          Code v = insert_reduce(u, pos, pieces[k].code);
          if (v.size() > limits.max_len) continue;
          auto h = bound(v);
          if (!h) continue;
          out.push_back({std::move(v), k, pos, h});
        }
      }
      return out;
    });
    for (std::size_t b = 0; b < batch.size() && !out_of_states; ++b) {
      const auto parent = batch[b];
      const auto g = nodes[parent].g + 1;
      for (auto& child : children[b]) {
        const auto it = seen.find(child.word);
        std::uint32_t id;
        if (it == seen.end()) {
          if (nodes.size() >= limits.max_states) {
            out_of_states = true;
            break;
          }
          id = static_cast<std::uint32_t>(nodes.size());
          nodes.push_back({std::move(child.word), parent, child.insertable, child.position, g});
          seen.emplace(nodes.back().word, id);
        } else {
          id = it->second;
          Node& n = nodes[id];
          if (g >= n.g) continue;
          n = {std::move(n.word), parent, child.insertable, child.position, g, false};
        }
        if (nodes[id].word.empty()) {
          if (!goal || g < nodes[*goal].g) goal = id;
          continue;
        }
        buckets[g + *child.h].push_back({id, g});
      }
    }
  }
  result.states = nodes.size();
  if (!goal) {
    if (out_of_states) result.reason = "max_states";
    result.capped = true;
    return result;
  }

  std::vector<std::uint32_t> path;
  for (auto id = *goal; id != 0; id = nodes[id].parent) path.push_back(id);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Node& n = nodes[*it];
    const Insertable& piece = pieces[n.insertable];
    result.certificate.push_back({piece.relator, piece.inverse, piece.rotation, n.position, decode(n.word)});
  }
  result.applications = result.certificate.size();
  result.reason = "found";
  return result;
}

std::optional<std::size_t> replay_certificate(const Presentation& p, const Word& w, std::span<const DehnStep> steps) {
  Word current = w;
  for (const auto& step : steps) {
    if (step.relator >= p.num_relators() || step.position > current.length()) return std::nullopt;
    current = insert_relator(p, current, step);
    if (current != step.result) return std::nullopt;
  }
  if (!current.empty()) return std::nullopt;
  return steps.size();
}

PowerCheckReport power_check(unsigned m, const DehnLimits& limits) {
  const TowerValue e = E(m);
  if (!e.is_exact() || e.value() > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("power_check: E(" + std::to_string(m) + ") does not fit in a machine word");
  }
  PowerCheckReport report;
  report.m = m;
  report.exponent = static_cast<std::int64_t>(e.value());
  const Word w = build_V(m) * Word::generator(0, -report.exponent);
  report.probe = dehn_probe(baumslag_gersten(), w, limits);
  return report;
}

Word build_w(std::uint64_t n) { return commutator(build_v(n), Word::generator(0)); }

}  // namespace bptk
