#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Words and loops are strings of letter codes (2*gen + inverse).

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bptk/triangulation.hpp"

namespace oracle {

std::string free_reduce(const std::string& codes);
std::string invert(const std::string& codes);

// Plain breadth-first search over insertions of every relator rotation and
// its inverse at every position; returns the least count reaching "".
std::optional<std::size_t> dehn_bfs(const std::vector<std::string>& relators, const std::string& word,
                                    std::size_t max_len, std::size_t max_states);

// Least facet list over all vertex relabelings onto 0..n-1.
std::vector<bptk::Simplex> brute_canonical(const bptk::Triangulation& t);

// Every valid move found by scanning all faces and their links, rendered as
// "A -> B".
std::set<std::string> brute_moves(const bptk::Triangulation& t, std::size_t max_vertices);

// fl by increasing threshold L: is "" reachable from the loop through loops
// of length <= L? Returns nothing when L = max_len fails.
std::optional<std::size_t> filling_threshold(const std::string& loop, const std::vector<std::string>& cells,
                                             std::size_t letters, std::size_t max_len);

// Order of the permutation group generated by `gens`.
std::size_t perm_group_order(const std::vector<std::vector<std::size_t>>& gens);

}  // namespace oracle
