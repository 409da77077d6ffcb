#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bptk/word.hpp"

namespace bptk {

class Presentation {
 public:
  Presentation() = default;
  // Every relator must be a word over `alphabet`. Relators are stored as
  // given (they are freely reduced by construction of Word).
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t num_generators() const noexcept { return alphabet_.size(); }
  std::size_t num_relators() const noexcept { return relators_.size(); }
  bool balanced() const noexcept { return num_generators() == num_relators(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

// <x, t | x^(x^t) = x^2> with a^b := b a b^-1; the single relator is
// t x T x t X T X X.
Presentation baumslag_gersten();

// Balanced presentation <x, t | r1, r2(n)> of the trivial group, where
// r2(n) is the cyclic reduction of [v_n, x^3][v_n, x^5][v_n, x^7] t^-1.
// Throws DomainError for n == 0.
Presentation build_Pn(std::uint64_t n);

// The uncyclically-reduced second relator [v_n,x^3][v_n,x^5][v_n,x^7] t^-1.
Word build_r2(std::uint64_t n);

// File format:
//   gens: x t
//   rel: <word>
//   ...
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
std::string to_text(const Presentation& p);

}  // namespace bptk
