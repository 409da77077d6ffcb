#pragma once

// Relator-application probe: minimal number of relator insertions needed to
// reduce a word to the empty word, found by best-first search over freely
// reduced words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bptk/presentation.hpp"

namespace bptk {

struct DehnLimits {
  // Longest intermediate (freely reduced) word admitted to the search. The
  // start word itself is always admitted.
  std::uint64_t max_len = 64;
  std::size_t max_states = 1'000'000;
  unsigned threads = 1;
};

// One insertion: the cyclic rotation by `rotation` letters of relator
// `relator` (inverted first when `inverse`) inserted before letter
// `position` of the current word, followed by free reduction.
struct DehnStep {
  std::size_t relator = 0;
  bool inverse = false;
  std::uint64_t rotation = 0;
  std::uint64_t position = 0;
  Word result;
};

struct DehnProbeResult {
  Word word;
  std::optional<std::size_t> applications;
  std::vector<DehnStep> certificate;
  std::size_t explored = 0;  // states expanded
  std::size_t states = 0;    // distinct states stored
  bool capped = false;
  // "found", "max_states" or "exhausted" (no derivation within max_len).
  std::string reason;
};

Word insert_relator(const Presentation& p, const Word& u, const DehnStep& step);

DehnProbeResult dehn_probe(const Presentation& p, const Word& w, const DehnLimits& limits);

// Replays a certificate from w. Returns the number of insertions if every
// recorded intermediate word matches and the final word is empty.
std::optional<std::size_t> replay_certificate(const Presentation& p, const Word& w,
                                              std::span<const DehnStep> steps);

struct PowerCheckReport {
  unsigned m = 0;
  std::int64_t exponent = 0;  // E(m)
  DehnProbeResult probe;
};

// Probes V_m * x^-E(m) in the Baumslag-Gersten group. Throws DomainError if
// E(m) does not fit in 63 bits.
PowerCheckReport power_check(unsigned m, const DehnLimits& limits);

// w_n = [v_n, x]
Word build_w(std::uint64_t n);

}  // namespace bptk
