#include "bptk/bistellar.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bptk/canonical.hpp"
#include "bptk/errors.hpp"
#include "bptk/parallel.hpp"

namespace bptk {

namespace {

Vertex fresh_vertex(const std::vector<Vertex>& used) {
  Vertex v = 0;
  for (const auto u : used) {
    if (u != v) break;
    ++v;
  }
  return v;
}

Simplex join(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex erase_at(const Simplex& s, std::size_t i) {
  Simplex out = s;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

bool contains(const Simplex& big, const Simplex& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<BistellarMove> enumerate_moves(const Triangulation& t, std::optional<std::size_t> max_vertices) {
  const auto d = t.dim();
  const auto verts = t.vertices();
  // face -> number of facets containing it
  std::map<Simplex, std::size_t> star;
  for (const auto& f : t.facets()) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) face.push_back(f[i]);
      }
      ++star[face];
    }
  }
  std::vector<BistellarMove> out;
  for (std::size_t size_a = d + 1; size_a >= 1; --size_a) {
    const std::size_t k = d + 2 - size_a;
    if (size_a == d + 1) {
      if (max_vertices && verts.size() + 1 > *max_vertices) continue;
      const Vertex v = fresh_vertex(verts);
      for (const auto& [face, n] : star) {
        if (face.size() == size_a && n == 1) out.push_back({face, {v}});
      }
      continue;
    }
    for (const auto& [face, n] : star) {
      if (face.size() != size_a || n != k) continue;
      std::set<Vertex> b;
      std::set<Simplex> link;
      for (const auto& rest : link_of_face(t, face)) {
        b.insert(rest.begin(), rest.end());
        link.insert(rest);
      }
      if (b.size() != k || link.size() != k) continue;
      Simplex bs(b.begin(), b.end());
      if (star.count(bs)) continue;
      out.push_back({face, std::move(bs)});
    }
  }
  return out;
}

Triangulation apply_move(const Triangulation& t, const BistellarMove& m) {
  const auto d = t.dim();
  const Simplex& a = m.removed;
  const Simplex& b = m.added;
  if (a.empty() || b.empty() || a.size() + b.size() != d + 2) {
    throw InvalidMove("move " + to_string(m) + ": |A| + |B| must be " + std::to_string(d + 2));
  }
  if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end()) ||
      std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end()) {
    throw InvalidMove("move " + to_string(m) + ": faces must be sorted and repeat no vertex");
  }
  auto link = link_of_face(t, a);
  std::sort(link.begin(), link.end());
  if (b.size() == 1) {
    const auto verts = t.vertices();
    if (link.size() != 1) throw InvalidMove("move " + to_string(m) + ": A is not a facet");
    if (std::binary_search(verts.begin(), verts.end(), b[0])) {
      throw InvalidMove("move " + to_string(m) + ": vertex " + std::to_string(b[0]) + " already in use");
    }
  } else {
    std::vector<Simplex> boundary;
    for (std::size_t i = b.size(); i-- > 0;) boundary.push_back(erase_at(b, i));
    std::sort(boundary.begin(), boundary.end());
    if (link != boundary) throw InvalidMove("move " + to_string(m) + ": link of A is not the boundary of B");
    for (const auto& f : t.facets()) {
      if (contains(f, b)) throw InvalidMove("move " + to_string(m) + ": B is already a face");
    }
  }
  std::vector<Simplex> facets;
  for (const auto& f : t.facets()) {
    if (!contains(f, a)) facets.push_back(f);
  }
  for (std::size_t i = 0; i < a.size(); ++i) facets.push_back(join(erase_at(a, i), b));
  return Triangulation(d, std::move(facets));
}

BistellarMove inverse(const BistellarMove& m) { return {m.added, m.removed}; }

std::string to_string(const BistellarMove& m) { return to_string(m.removed) + " -> " + to_string(m.added); }

BistellarMove parse_move(std::string_view text) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) throw ParseError("move needs \"A -> B\"");
  auto side = [&](std::string_view part) {
    std::istringstream in{std::string(part)};
    Simplex s;
    long long v = 0;
    while (in >> v) {
      if (v < 0 || v > 0xffffffffll) throw ParseError("bad vertex in move");
      s.push_back(static_cast<Vertex>(v));
    }
    if (!in.eof()) throw ParseError("bad vertex in move");
    std::sort(s.begin(), s.end());
    return s;
  };
  return {side(text.substr(0, arrow)), side(text.substr(arrow + 2))};
}

BistDistance bfs_distance(const Triangulation& a, const Triangulation& b, const BistLimits& limits) {
  if (a.dim() != b.dim()) throw std::invalid_argument("bfs_distance: dimensions differ");
  BistDistance result;
  const std::string target = canonical_key(b);
  std::unordered_set<std::string> seen;
  std::vector<Triangulation> frontier{canonical_triangulation(a)};
  seen.insert(canonical_key(a));
  result.states = 1;
  if (seen.count(target)) {
    result.distance = 0;
    result.reason = "found";
    return result;
  }
  struct Child {
    std::string key;
    Triangulation t;
  };
  for (std::size_t depth = 0;; ++depth) {
    if (frontier.empty()) {
      result.capped = true;
      result.reason = "exhausted";
      return result;
    }
    auto expanded = parallel_map(frontier, limits.threads, [&](const Triangulation& t) {
      std::vector<Child> out;
      for (const auto& m : enumerate_moves(t, limits.max_vertices)) {
        auto c = canonical_triangulation(apply_move(t, m));
        auto key = canonical_key(c);
        out.push_back({std::move(key), std::move(c)});
      }
      return out;
    });
    std::vector<Triangulation> next;
    for (auto& children : expanded) {
      for (auto& c : children) {
        if (seen.count(c.key)) continue;
        if (c.key == target) {
          result.states = seen.size() + 1;
          result.distance = depth + 1;
          result.radius = depth + 1;
          result.reason = "found";
          return result;
        }
        if (seen.size() >= limits.max_states) {
          result.states = seen.size();
          result.capped = true;
          result.reason = "max_states";
          return result;
        }
        seen.insert(c.key);
        next.push_back(std::move(c.t));
      }
    }
    result.radius = depth + 1;
    result.states = seen.size();
    frontier = std::move(next);
  }
}

WalkResult random_walk(const Triangulation& t, std::size_t steps, std::uint64_t seed,
                       std::optional<std::size_t> max_vertices, const WalkObserver& observer) {
  WalkResult r;
  r.final = t;
  r.f_trace.push_back(t.f_vector());
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto moves = enumerate_moves(r.final, max_vertices);
    if (moves.empty()) break;
    const auto& m = moves[uniform_index(rng, moves.size())];
    Triangulation next = apply_move(r.final, m);
    if (observer) observer(r.final, m, next);
    r.moves.push_back(m);
    r.f_trace.push_back(next.f_vector());
    r.final = std::move(next);
  }
  return r;
}

}  // namespace bptk
