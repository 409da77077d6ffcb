#include "bptk/presentation.hpp"

#include <optional>
#include <sstream>

#include "bptk/errors.hpp"

namespace bptk {

namespace {

constexpr Gen kX = 0;
constexpr Gen kT = 1;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
  for (const auto& r : relators_) {
    for (const auto& s : r.syllables()) {
      if (s.gen >= alphabet_.size()) throw AlphabetError("relator uses a generator outside the alphabet");
    }
  }
}

Presentation baumslag_gersten() {
  const Word x = Word::generator(kX);
  const Word t = Word::generator(kT);
  const Word r1 = conjugate(x, conjugate(x, t)) * x.pow(-2);
  return Presentation(Alphabet("xt"), {r1});
}

Word build_r2(std::uint64_t n) {
  const Word v = build_v(n, kX, kT);
  const Word vi = v.inverse();
  Word r;
  for (const std::int64_t k : {3, 5, 7}) {
    r *= v;
    r *= Word::generator(kX, k);
    r *= vi;
    r *= Word::generator(kX, -k);
  }
  r *= Word::generator(kT, -1);
  return r;
}

Presentation build_Pn(std::uint64_t n) {
  if (n == 0) throw DomainError("build_Pn: n must be positive");
  const Word r1 = baumslag_gersten().relators().front();
  Word r2 = build_r2(n).cyclically_reduced();
  if (r2.empty()) throw DomainError("build_Pn: second relator reduced to the empty word");
  std::vector<Word> rels;
  rels.reserve(2);
  rels.push_back(r1);
  rels.push_back(std::move(r2));
  return Presentation(Alphabet("xt"), std::move(rels));
}

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::pair<std::size_t, std::string>> rels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("gens:", 0) == 0) {
      if (alphabet) throw ParseError("duplicate 'gens:' line", line_no);
      try {
        alphabet = Alphabet::parse(line.substr(5));
      } catch (const AlphabetError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (line.rfind("rel:", 0) == 0) {
      if (!alphabet) throw ParseError("'rel:' before 'gens:'", line_no);
      rels.emplace_back(line_no, std::string(line.substr(4)));
    } else {
      throw ParseError("expected 'gens:' or 'rel:', got \"" + std::string(line) + "\"", line_no);
    }
  }
  if (!alphabet) throw ParseError("missing 'gens:' line");
  std::vector<Word> relators;
  for (const auto& [ln, body] : rels) {
    try {
      relators.push_back(parse_word(body, *alphabet));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return Presentation(*alphabet, std::move(relators));
}

std::string to_text(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (char c : p.alphabet().symbols()) out << ' ' << c;
  out << '\n';
  for (const auto& r : p.relators()) out << "rel: " << to_string(r, p.alphabet()) << '\n';
  return out.str();
}

}  // namespace bptk
