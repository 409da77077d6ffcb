#pragma once

// Andrews-Curtis moves on balanced presentations and a breadth-first search
// for trivializing sequences.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bptk/presentation.hpp"

namespace bptk {

struct AcMove {
  enum class Kind { invert, multiply, conjugate };

  Kind kind = Kind::invert;
  std::size_t i = 0;
  std::size_t j = 0;  // multiply only
  Letter by{};        // conjugate only

  static AcMove invert(std::size_t i) { return {Kind::invert, i, 0, {}}; }
  static AcMove multiply(std::size_t i, std::size_t j) { return {Kind::multiply, i, j, {}}; }
  static AcMove conjugate(std::size_t i, Letter by) { return {Kind::conjugate, i, 0, by}; }

  friend bool operator==(const AcMove&, const AcMove&) = default;
};

// r_i <- r_i^-1, r_i <- r_i r_j, or r_i <- g r_i g^-1 (freely reduced).
// Throws std::out_of_range on bad indices and std::invalid_argument when
// i == j for multiply or the conjugating letter is outside the alphabet.
Presentation ac_move(const Presentation& p, const AcMove& move);
Presentation apply_moves(Presentation p, std::span<const AcMove> moves);

// "invert 0", "multiply 0 1", "conjugate 1 X".
std::string to_string(const AcMove& move, const Alphabet& alphabet);
AcMove parse_ac_move(std::string_view text, const Alphabet& alphabet);

// Cyclic reduction, then the least word among all rotations of it and of
// its inverse.
Word canonical_relator(const Word& r);
// Canonical relators, sorted.
std::vector<Word> canonical_relators(const Presentation& p);
bool same_up_to_cyclic_reduction(const Presentation& a, const Presentation& b);

struct AcSearchLimits {
  std::size_t max_depth = 12;
  std::uint64_t max_len = 16;
  std::size_t max_states = 1'000'000;
  unsigned threads = 1;
};

struct AcSearchResult {
  bool found = false;
  // Elementary moves; replaying them from the start presentation reaches the
  // target up to cyclic reduction.
  std::vector<AcMove> moves;
  // Number of search steps (relator multiplications by a cyclic
  // conjugate of another relator or its inverse).
  std::size_t depth = 0;
  std::size_t states = 0;
  // Depth of the last fully expanded layer.
  std::size_t explored_depth = 0;
  // "found", "max_depth", "max_states" or "exhausted".
  std::string reason;
};

// Breadth-first search over canonical presentations. Each step replaces a
// relator r_i by the cyclic reduction of r_i' * r_j' where r_i' is a cyclic
// rotation of r_i and r_j' a cyclic rotation of r_j or r_j^-1; relators
// longer than max_len are pruned. Deterministic for every thread count.
AcSearchResult ac_search(const Presentation& start, const Presentation& target,
                         const AcSearchLimits& limits);

// <gens | g_1, ..., g_n>
Presentation trivial_presentation(const Alphabet& alphabet);

}  // namespace bptk
