#pragma once

// Free-group words in run-length (syllable) form.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bptk {

using Gen = std::uint32_t;

// A single signed generator letter. Letters are totally ordered by their
// code 2*gen + (inverse ? 1 : 0), so with alphabet "x t" the order is
// x < X < t < T.
struct Letter {
  Gen gen = 0;
  bool inverse = false;

  constexpr std::uint32_t code() const noexcept { return 2 * gen + (inverse ? 1 : 0); }
  static constexpr Letter from_code(std::uint32_t c) noexcept { return {c / 2, (c & 1) != 0}; }
  constexpr Letter inverted() const noexcept { return {gen, !inverse}; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept { return a.code() <=> b.code(); }
};

struct Syllable {
  Gen gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Ordered set of generator symbols. Lowercase letters name generators; the
// uppercase form of a symbol denotes its inverse.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols);

  // Parses a whitespace-separated symbol list such as "x t".
  static Alphabet parse(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Gen g) const { return symbols_.at(g); }
  const std::string& symbols() const noexcept { return symbols_; }

  // Throws AlphabetError for characters that are not (inverse) symbols.
  Letter letter(char c) const;
  char render(Letter l) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

// Freely reduced word. Adjacent syllables always carry distinct generators
// and no exponent is zero, so equality is equality in the free group.
class Word {
 public:
  Word() = default;

  static Word generator(Gen g, std::int64_t exp = 1);
  static Word from_letters(std::span<const Letter> letters);
  static Word from_syllables(std::span<const Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::uint64_t length() const noexcept { return length_; }
  bool empty() const noexcept { return syllables_.empty(); }

  std::vector<Letter> letters() const;
  Letter letter_at(std::uint64_t pos) const;

  Word inverse() const;
  Word pow(std::int64_t k) const;

  // Subword of `len` letters starting at letter `pos`.
  Word subword(std::uint64_t pos, std::uint64_t len) const;
  // Letter sequence rotated left by `k`, then freely reduced.
  Word rotated(std::uint64_t k) const;

  bool is_cyclically_reduced() const;
  // Returns the cyclically reduced core c with *this == conj * c * conj^-1.
  Word cyclically_reduced(Word* conjugator = nullptr) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word& a, const Word& b) { return a.syllables_ == b.syllables_; }
  // Shortlex on letter codes.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  void push(Gen g, std::int64_t exp);

  std::vector<Syllable> syllables_;
  std::uint64_t length_ = 0;
};

Word reduce(std::span<const Letter> letters);
Word invert(const Word& w);
// by * base * by^-1
Word conjugate(const Word& base, const Word& by);
// a * b * a^-1 * b^-1
Word commutator(const Word& a, const Word& b);

// V_0 = x, V_{m+1} = conjugate(x, conjugate(V_m, t)). Represents x^{E(m)} in
// the Baumslag-Gersten group; |V_m| = 6*2^m - 5.
Word build_V(unsigned m, Gen x = 0, Gen t = 1);
// build_V(floor(log2 n)). Throws DomainError for n == 0.
Word build_v(std::uint64_t n, Gen x = 0, Gen t = 1);

// Text syntax: lowercase symbol = generator, uppercase = inverse, whitespace
// ignored, and an optional integer power suffix "x^12" / "x^-3". A lone "1"
// denotes the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Letter-by-letter rendering ("txTx"); the empty word renders as "1".
std::string to_string(const Word& w, const Alphabet& alphabet);
// Syllable rendering ("t x^2 T"), used where powers are huge.
std::string to_compact_string(const Word& w, const Alphabet& alphabet);

}  // namespace bptk
