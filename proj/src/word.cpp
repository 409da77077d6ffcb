#include "bptk/word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "bptk/errors.hpp"

namespace bptk {

namespace {

std::uint64_t magnitude(std::int64_t e) { return e < 0 ? std::uint64_t(-(e + 1)) + 1 : std::uint64_t(e); }

}  // namespace

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (!std::islower(static_cast<unsigned char>(c))) {
      throw AlphabetError(std::string("generator symbols must be lowercase letters, got '") + c + "'");
    }
    if (symbols_.find(c, i + 1) != std::string::npos) {
      throw AlphabetError(std::string("duplicate generator symbol '") + c + "'");
    }
  }
}

Alphabet Alphabet::parse(std::string_view text) {
  std::string symbols;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    symbols.push_back(c);
  }
  return Alphabet(std::move(symbols));
}

Letter Alphabet::letter(char c) const {
  const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto pos = symbols_.find(lower);
  if (pos == std::string::npos || !std::isalpha(static_cast<unsigned char>(c))) {
    throw AlphabetError(std::string("unknown generator letter '") + c + "' (alphabet \"" + symbols_ + "\")");
  }
  return {static_cast<Gen>(pos), inverse};
}

char Alphabet::render(Letter l) const {
  const char c = symbol(l.gen);
  return l.inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

Word Word::generator(Gen g, std::int64_t exp) {
  Word w;
  w.push(g, exp);
  return w;
}

void Word::push(Gen g, std::int64_t exp) {
  if (exp == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == g) {
    auto& back = syllables_.back();
    length_ -= magnitude(back.exp);
    back.exp += exp;
    if (back.exp == 0) {
      syllables_.pop_back();
    } else {
      length_ += magnitude(back.exp);
    }
    return;
  }
  syllables_.push_back({g, exp});
  length_ += magnitude(exp);
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (const Letter l : letters) w.push(l.gen, l.inverse ? -1 : 1);
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.push(s.gen, s.exp);
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length_);
  for (const auto& s : syllables_) {
    const Letter l{s.gen, s.exp < 0};
    out.insert(out.end(), magnitude(s.exp), l);
  }
  return out;
}

Letter Word::letter_at(std::uint64_t pos) const {
  for (const auto& s : syllables_) {
    const auto m = magnitude(s.exp);
    if (pos < m) return {s.gen, s.exp < 0};
    pos -= m;
  }
  throw std::out_of_range("Word::letter_at: position past end of word");
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->gen, -it->exp});
  }
  w.length_ = length_;
  return w;
}

Word Word::pow(std::int64_t k) const {
  if (k == 0 || empty()) return {};
  if (syllables_.size() == 1) return generator(syllables_[0].gen, syllables_[0].exp * k);
  const Word base = k < 0 ? inverse() : *this;
  Word w;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w *= base;
  return w;
}

Word Word::subword(std::uint64_t pos, std::uint64_t len) const {
  if (pos + len > length_) throw std::out_of_range("Word::subword: range past end of word");
  Word w;
  for (const auto& s : syllables_) {
    if (len == 0) break;
    const auto m = magnitude(s.exp);
    if (pos >= m) {
      pos -= m;
      continue;
    }
    const auto take = std::min(m - pos, len);
    w.push(s.gen, s.exp < 0 ? -static_cast<std::int64_t>(take) : static_cast<std::int64_t>(take));
    len -= take;
    pos = 0;
  }
  return w;
}

Word Word::rotated(std::uint64_t k) const {
  if (length_ == 0) return {};
  k %= length_;
  if (k == 0) return *this;
  return subword(k, length_ - k) * subword(0, k);
}

bool Word::is_cyclically_reduced() const {
  if (syllables_.size() < 2) return true;
  return syllables_.front().gen != syllables_.back().gen;
}

Word Word::cyclically_reduced(Word* conjugator) const {
  // Invariant: *this == conj * core * conj^-1, where core is s[i..j] with
  // end exponents fe and le.
  const auto& s = syllables_;
  Word conj;
  std::size_t i = 0;
  std::size_t j = s.empty() ? 0 : s.size() - 1;
  std::int64_t fe = s.empty() ? 0 : s[i].exp;
  std::int64_t le = s.empty() ? 0 : s[j].exp;
  while (j > i && s[i].gen == s[j].gen) {
    const Gen g = s[i].gen;
    if ((fe > 0) != (le > 0)) {
      const auto shared = static_cast<std::int64_t>(std::min(magnitude(fe), magnitude(le)));
      const std::int64_t e = fe > 0 ? shared : -shared;
      conj.push(g, e);
      fe -= e;
      le += e;
    } else {
      // g^a u g^b = g^-b (g^(a+b) u) g^b
      conj.push(g, -le);
      fe += le;
      le = 0;
    }
    const bool drop_first = fe == 0;
    const bool drop_last = le == 0;
    if (drop_last) --j;
    if (drop_first) ++i;
    if (i > j) break;
    if (i == j) {
      fe = le = !drop_first ? fe : !drop_last ? le : s[i].exp;
    } else {
      if (drop_first) fe = s[i].exp;
      if (drop_last) le = s[j].exp;
    }
  }
  if (conjugator) *conjugator = conj;
  Word core;
  if (s.empty() || i > j) return core;
  core.syllables_.assign(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  core.syllables_.front().exp = fe;
  core.syllables_.back().exp = le;
  for (const auto& y : core.syllables_) core.length_ += magnitude(y.exp);
  return core;
}

Word& Word::operator*=(const Word& rhs) {
  if (&rhs == this) return *this *= Word(rhs);
  const std::size_t need = syllables_.size() + rhs.syllables_.size();
  if (need > syllables_.capacity()) syllables_.reserve(std::max(need, 2 * syllables_.capacity()));
  for (const auto& s : rhs.syllables_) push(s.gen, s.exp);
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.length_ != b.length_) return a.length_ <=> b.length_;
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t left_i = a.syllables_.empty() ? 0 : magnitude(a.syllables_[0].exp);
  std::uint64_t left_j = b.syllables_.empty() ? 0 : magnitude(b.syllables_[0].exp);
  while (i < a.syllables_.size() && j < b.syllables_.size()) {
    const Letter la{a.syllables_[i].gen, a.syllables_[i].exp < 0};
    const Letter lb{b.syllables_[j].gen, b.syllables_[j].exp < 0};
    if (la != lb) return la <=> lb;
    const auto step = std::min(left_i, left_j);
    left_i -= step;
    left_j -= step;
    if (left_i == 0 && ++i < a.syllables_.size()) left_i = magnitude(a.syllables_[i].exp);
    if (left_j == 0 && ++j < b.syllables_.size()) left_j = magnitude(b.syllables_[j].exp);
  }
  return std::strong_ordering::equal;
}

Word reduce(std::span<const Letter> letters) { return Word::from_letters(letters); }

Word invert(const Word& w) { return w.inverse(); }

Word conjugate(const Word& base, const Word& by) { return by * base * by.inverse(); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word build_V(unsigned m, Gen x, Gen t) {
  const Word xw = Word::generator(x);
  const Word tw = Word::generator(t);
  Word v = xw;
  for (unsigned i = 0; i < m; ++i) v = conjugate(xw, conjugate(v, tw));
  return v;
}

Word build_v(std::uint64_t n, Gen x, Gen t) {
  if (n == 0) throw DomainError("build_v: n must be positive");
  return build_V(static_cast<unsigned>(std::bit_width(n)) - 1, x, t);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Syllable> syllables;
  bool saw_one = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      saw_one = true;
      ++i;
      continue;
    }
    const Letter l = alphabet.letter(c);
    ++i;
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      const auto [ptr, ec] = std::from_chars(first, last, exp);
      if (ec != std::errc() || ptr == first) throw ParseError("bad exponent after '^' in word \"" + std::string(text) + "\"");
      i += static_cast<std::size_t>(ptr - first);
    }
    syllables.push_back({l.gen, l.inverse ? -exp : exp});
  }
  Word w = Word::from_syllables(syllables);
  if (saw_one && !syllables.empty()) throw ParseError("'1' denotes the empty word and cannot be mixed with letters");
  return w;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.length());
  for (const auto& s : w.syllables()) {
    out.append(magnitude(s.exp), alphabet.render({s.gen, s.exp < 0}));
  }
  return out;
}

std::string to_compact_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(alphabet.render({s.gen, s.exp < 0}));
    if (magnitude(s.exp) != 1) out += "^" + std::to_string(magnitude(s.exp));
  }
  return out;
}

}  // namespace bptk
