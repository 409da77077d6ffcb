#include <doctest.h>

#include <random>

#include "bptk/errors.hpp"
#include "bptk/word.hpp"
#include "oracles.hpp"

using namespace bptk;

namespace {

std::string codes_of(const Word& w) {
  std::string s;
  for (const Letter l : w.letters()) s.push_back(static_cast<char>(l.code()));
  return s;
}

// V_m built letter by letter with no reduction until the end.
std::string naive_V(unsigned m) {
  const std::string x{0}, t{2};
  std::string v = x;
  for (unsigned i = 0; i < m; ++i) {
    const std::string a = t + v + oracle::invert(t);
    v = a + x + oracle::invert(a);
  }
  return oracle::free_reduce(v);
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("free reduction matches a stack reduction") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Letter> letters;
      std::string codes;
      const auto len = rng() % 30;
      for (std::size_t i = 0; i < len; ++i) {
        const auto c = static_cast<std::uint32_t>(rng() % 4);
        letters.push_back(Letter::from_code(c));
        codes.push_back(static_cast<char>(c));
      }
      const Word w = Word::from_letters(letters);
      CHECK(codes_of(w) == oracle::free_reduce(codes));
      CHECK(w.length() == oracle::free_reduce(codes).size());
      CHECK((w * w.inverse()).empty());
    }
  }

  TEST_CASE("parse and render") {
    const Alphabet a("xt");
    CHECK(to_string(parse_word("txTx", a), a) == "txTx");
    CHECK(to_string(parse_word("x^3 X", a), a) == "xx");
    CHECK(parse_word("x^-2", a) == Word::generator(0, -2));
    CHECK(parse_word("1", a).empty());
    CHECK(to_string(Word{}, a) == "1");
    CHECK(to_compact_string(parse_word("txxT", a), a) == "t x^2 T");
    CHECK_THROWS_AS(parse_word("xy", a), AlphabetError);
  }

  TEST_CASE("conjugation and commutators") {
    const Alphabet a("xt");
    const Word x = Word::generator(0), t = Word::generator(1);
    CHECK(to_string(conjugate(x, t), a) == "txT");
    CHECK(to_string(commutator(x, t), a) == "xtXT");
  }

  TEST_CASE("V_m length and letters") {
    for (unsigned m = 0; m <= 12; ++m) {
      const Word v = build_V(m);
      CHECK(v.length() == 6 * (std::uint64_t{1} << m) - 5);
      CHECK(codes_of(v) == naive_V(m));
    }
    CHECK(build_v(1) == build_V(0));
    CHECK(build_v(7) == build_V(2));
    CHECK(build_v(8) == build_V(3));
    CHECK_THROWS_AS(build_v(0), DomainError);
  }

  TEST_CASE("cyclic reduction matches stripping inverse end letters") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<Syllable> syl;
      for (auto k = rng() % 7; k > 0; --k) {
        syl.push_back({static_cast<Gen>(rng() % 2), static_cast<std::int64_t>(rng() % 7) - 3});
      }
      const Word w = Word::from_syllables(syl);
      std::string naive = codes_of(w);
      while (naive.size() >= 2 && naive.front() == (naive.back() ^ 1)) naive = naive.substr(1, naive.size() - 2);
      Word c;
      const Word core = w.cyclically_reduced(&c);
      CHECK(core.is_cyclically_reduced());
      CHECK(core.length() == naive.size());
      CHECK(c * core * c.inverse() == w);
    }
  }

  TEST_CASE("cyclic reduction") {
    const Alphabet a("xt");
    Word c;
    const Word w = parse_word("txxtT", a) * parse_word("T", a);
    const Word core = w.cyclically_reduced(&c);
    CHECK(core.is_cyclically_reduced());
    CHECK(c * core * c.inverse() == w);
  }
}
