#pragma once

// Combinatorial filling length on presentation 2-complexes. A loop is a
// cyclic edge word, not necessarily reduced; a null-homotopy is a sequence
// of elementary moves (backtrack insertion or removal, or replacing an arc
// of a 2-cell boundary by the complementary arc). fl is the least, over
// null-homotopies, of the longest loop along the way.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bptk/presentation.hpp"

namespace bptk {

// One vertex, one edge pair per generator, one 2-cell per relator.
class TwoComplex {
 public:
  TwoComplex() = default;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  // Cell boundaries as cyclic words of letter codes (see Letter::code).
  const std::vector<std::string>& cells() const noexcept { return cells_; }
  std::size_t num_vertices() const noexcept { return 1; }
  std::size_t num_edges() const noexcept { return alphabet_.size(); }
  std::size_t num_cells() const noexcept { return cells_.size(); }
  std::int64_t euler() const noexcept {
    return 1 - static_cast<std::int64_t>(num_edges()) + static_cast<std::int64_t>(num_cells());
  }

  friend TwoComplex presentation_complex(const Presentation& p);

 private:
  Alphabet alphabet_;
  std::vector<std::string> cells_;
};

// Throws std::invalid_argument on an empty relator.
TwoComplex presentation_complex(const Presentation& p);

// Cyclic edge word stored at its least rotation.
class LoopState {
 public:
  LoopState() = default;
  explicit LoopState(std::string codes);

  const std::string& codes() const noexcept { return codes_; }
  std::size_t length() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  LoopState inverse() const;

  friend bool operator==(const LoopState&, const LoopState&) = default;
  friend auto operator<=>(const LoopState&, const LoopState&) = default;

 private:
  std::string codes_;
};

// Letters as in words ("x", "X"), read without free reduction; "1" or ""
// is the empty loop. Throws AlphabetError.
LoopState parse_loop(std::string_view text, const Alphabet& alphabet);
LoopState loop_of(const Word& w);
std::string to_string(const LoopState& s, const Alphabet& alphabet);

// Every loop one elementary move away with length <= max_len, sorted and
// duplicate-free. The relation is symmetric.
std::vector<LoopState> neighbors(const LoopState& s, const TwoComplex& x, std::size_t max_len);

struct FillingResult {
  std::optional<std::size_t> fl;
  std::size_t states = 0;
  bool capped = false;
  // Without a value: fl >= lower_bound. With max_len exhausted this is
  // max_len + 1.
  std::size_t lower_bound = 0;
  std::string reason;  // "found", "max_states" or "max_len"
};

// Bottleneck search: a bucket queue keyed by the longest loop on the best
// path so far. The start loop is admitted even if longer than max_len.
FillingResult filling_length(const LoopState& loop, const TwoComplex& x, std::size_t max_len,
                             std::size_t max_states);

struct FillCaps {
  std::size_t max_len = 16;
  std::size_t max_states = 1'000'000;
};

struct FlRatio {
  // Largest fl/length over certified loops, as a fraction; 0/1 if none.
  std::size_t numerator = 0;
  std::size_t denominator = 1;
  std::optional<LoopState> witness;
  std::size_t loops = 0;   // cyclically reduced loops examined
  std::size_t capped = 0;  // of which fl was not certified
  bool partial() const noexcept { return capped > 0; }
};

// All cyclically reduced loops of length 1..max_loop_len, one per rotation
// class.
std::vector<LoopState> reduced_loops(const TwoComplex& x, std::size_t max_loop_len);

FlRatio fl_ratio(const TwoComplex& x, std::size_t max_loop_len, const FillCaps& caps);

struct GrowthRow {
  std::uint64_t n = 0;
  std::string generator;
  std::string fl_or_bound;  // "12" or ">12"
  std::size_t states = 0;
  bool capped = false;

  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

// fl of each generator loop of P_n.
std::vector<GrowthRow> growth_probe(const std::vector<std::uint64_t>& ns, const FillCaps& caps);

std::string growth_csv(const std::vector<GrowthRow>& rows);
std::string growth_json(const std::vector<GrowthRow>& rows);
std::vector<GrowthRow> parse_growth_json(std::string_view text);

}  // namespace bptk
