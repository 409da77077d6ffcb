#pragma once

// Bistellar (Pachner) moves, indexed by the removed face A: when
// link(A) = boundary(B) and B is not a face, the star A * boundary(B) is
// replaced by boundary(A) * B. The move removes |B| facets and adds |A|.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bptk/triangulation.hpp"

namespace bptk {

struct BistellarMove {
  Simplex removed;  // A
  Simplex added;    // B; a single fresh vertex when A is a facet

  std::size_t facets_removed() const noexcept { return added.size(); }
  std::size_t facets_added() const noexcept { return removed.size(); }

  friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
};

// Every valid move, ordered by facets removed and then by A. Moves that
// would create a vertex are omitted when the result would exceed
// max_vertices. The fresh vertex is the smallest unused id.
std::vector<BistellarMove> enumerate_moves(const Triangulation& t,
                                           std::optional<std::size_t> max_vertices = std::nullopt);

// Throws InvalidMove naming the failed condition.
Triangulation apply_move(const Triangulation& t, const BistellarMove& m);

BistellarMove inverse(const BistellarMove& m);

// "0 1 2 -> 5"
std::string to_string(const BistellarMove& m);
BistellarMove parse_move(std::string_view text);

struct BistLimits {
  std::size_t max_vertices = 10;
  std::size_t max_states = 100'000;
  unsigned threads = 1;
};

struct BistDistance {
  std::optional<std::size_t> distance;
  // Every class within this many moves has been visited; a lower bound on
  // the distance when none was found.
  std::size_t radius = 0;
  std::size_t states = 0;
  bool capped = false;
  std::string reason;  // "found", "max_states" or "exhausted"
};

// Breadth-first search over isomorphism classes, starting from a, with
// every visited class having at most max_vertices vertices (a itself is
// always admitted). Throws std::invalid_argument if dimensions differ.
BistDistance bfs_distance(const Triangulation& a, const Triangulation& b, const BistLimits& limits);

struct WalkResult {
  Triangulation final;
  std::vector<BistellarMove> moves;
  std::vector<std::vector<std::size_t>> f_trace;  // start, then after each move
};

using WalkObserver = std::function<void(const Triangulation& before, const BistellarMove& move,
                                        const Triangulation& after)>;

// Each step picks uniformly among enumerate_moves(t, max_vertices) with a
// seeded 64-bit Mersenne Twister.
WalkResult random_walk(const Triangulation& t, std::size_t steps, std::uint64_t seed,
                       std::optional<std::size_t> max_vertices = std::nullopt,
                       const WalkObserver& observer = {});

// Uniform index in [0, n) from a full-range 64-bit generator, by rejection,
// so traces do not depend on the standard library's distributions.
template <class Rng>
std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t floor = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= floor) return r % n;
  }
}

}  // namespace bptk
