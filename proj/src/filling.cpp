#include "bptk/filling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "bptk/errors.hpp"

namespace bptk {

namespace {

std::string invert_codes(std::string_view s) {
  std::string out(s.rbegin(), s.rend());
  for (auto& c : out) c = static_cast<char>(c ^ 1);
  return out;
}

std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::string r = s.substr(k) + s.substr(0, k);
    if (r < best) best = std::move(r);
  }
  return best;
}

std::string rotate(const std::string& s, std::size_t k) { return s.substr(k) + s.substr(0, k); }

}  // namespace

TwoComplex presentation_complex(const Presentation& p) {
  TwoComplex x;
  x.alphabet_ = p.alphabet();
  for (const auto& r : p.relators()) {
    if (r.empty()) throw std::invalid_argument("presentation_complex: empty relator");
    std::string cell;
    for (const Letter l : r.letters()) cell.push_back(static_cast<char>(l.code()));
    x.cells_.push_back(std::move(cell));
  }
  return x;
}

LoopState::LoopState(std::string codes) : codes_(least_rotation(codes)) {}

LoopState LoopState::inverse() const { return LoopState(invert_codes(codes_)); }

LoopState parse_loop(std::string_view text, const Alphabet& alphabet) {
  std::string codes;
  bool one = false;
  for (const char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '1') {
      one = true;
      continue;
    }
    codes.push_back(static_cast<char>(alphabet.letter(c).code()));
  }
  if (one && !codes.empty()) throw ParseError("\"1\" only denotes the empty loop");
  return LoopState(std::move(codes));
}

LoopState loop_of(const Word& w) {
  std::string codes;
  for (const Letter l : w.letters()) codes.push_back(static_cast<char>(l.code()));
  return LoopState(std::move(codes));
}

std::string to_string(const LoopState& s, const Alphabet& alphabet) {
  if (s.empty()) return "1";
  std::string out;
  for (const char c : s.codes()) out.push_back(alphabet.render(Letter::from_code(static_cast<unsigned char>(c))));
  return out;
}

std::vector<LoopState> neighbors(const LoopState& s, const TwoComplex& x, std::size_t max_len) {
  const std::string& c = s.codes();
  const std::size_t len = c.size();
  std::set<LoopState> out;
  auto emit = [&](std::string codes) {
    if (codes.size() <= max_len) out.insert(LoopState(std::move(codes)));
  };
  const std::size_t gaps = std::max<std::size_t>(len, 1);

  for (std::size_t i = 0; i < len && len >= 2; ++i) {
    if (c[i] == (c[(i + 1) % len] ^ 1)) emit(rotate(c, i).substr(2));
  }
  if (len + 2 <= max_len) {
    for (std::size_t p = 0; p < gaps; ++p) {
      for (std::size_t l = 0; l < 2 * x.num_edges(); ++l) {
        std::string w = c.substr(0, p);
        w.push_back(static_cast<char>(l));
        w.push_back(static_cast<char>(l ^ 1));
        w += c.substr(p);
        emit(std::move(w));
      }
    }
  }
  for (const auto& cell : x.cells()) {
    for (const std::string& boundary : {cell, invert_codes(cell)}) {
      const std::size_t m = boundary.size();
      for (std::size_t r = 0; r < m; ++r) {
        const std::string rho = rotate(boundary, r);
        for (std::size_t j = 0; j <= m && j <= len; ++j) {
          if (len - j + (m - j) > max_len) continue;
          const std::string arc = rho.substr(0, j);
          const std::string replacement = invert_codes(rho.substr(j));
          if (j == 0) {
            for (std::size_t p = 0; p < gaps; ++p) emit(c.substr(0, p) + replacement + c.substr(p));
            continue;
          }
          for (std::size_t i = 0; i < len; ++i) {
            const std::string from_i = rotate(c, i);
            if (from_i.compare(0, j, arc) == 0) emit(replacement + from_i.substr(j));
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

FillingResult filling_length(const LoopState& loop, const TwoComplex& x, std::size_t max_len, std::size_t max_states) {
  FillingResult r;
  if (loop.empty()) {
    r.fl = 0;
    r.states = 1;
    r.reason = "found";
    return r;
  }
  const std::size_t top = std::max(max_len, loop.length());
  std::vector<std::vector<LoopState>> buckets(top + 1);
  std::unordered_map<std::string, std::size_t> best;
  best.emplace(loop.codes(), loop.length());
  buckets[loop.length()].push_back(loop);
  for (std::size_t cost = loop.length(); cost <= top; ++cost) {
    for (std::size_t q = 0; q < buckets[cost].size(); ++q) {
      const LoopState s = buckets[cost][q];
      if (best.at(s.codes()) != cost) continue;
      for (auto& n : neighbors(s, x, max_len)) {
        const std::size_t c = std::max(cost, n.length());
        if (n.empty()) {
          r.fl = c;
          r.states = best.size() + 1;
          r.lower_bound = c;
          r.reason = "found";
          return r;
        }
        const auto it = best.find(n.codes());
        if (it != best.end() && it->second <= c) continue;
        if (it == best.end() && best.size() >= max_states) {
          r.states = best.size();
          r.capped = true;
          r.lower_bound = cost;
          r.reason = "max_states";
          return r;
        }
        best[n.codes()] = c;
        buckets[c].push_back(std::move(n));
      }
    }
    buckets[cost].clear();
    buckets[cost].shrink_to_fit();
  }
  r.states = best.size();
  r.capped = true;
  r.lower_bound = top + 1;
  r.reason = "max_len";
  return r;
}

std::vector<LoopState> reduced_loops(const TwoComplex& x, std::size_t max_loop_len) {
  std::vector<LoopState> out;
  const auto letters = static_cast<char>(2 * x.num_edges());
  std::string w;
  auto extend = [&](auto&& self, std::size_t len) -> void {
    if (w.size() == len) {
      if ((w.front() ^ 1) == w.back() && len > 1) return;
      if (len == 1 || least_rotation(w) == w) out.emplace_back(w);
      return;
    }
    for (char l = 0; l < letters; ++l) {
      if (!w.empty() && (w.back() ^ 1) == l) continue;
      w.push_back(l);
      self(self, len);
      w.pop_back();
    }
  };
  for (std::size_t len = 1; len <= max_loop_len; ++len) extend(extend, len);
  return out;
}

FlRatio fl_ratio(const TwoComplex& x, std::size_t max_loop_len, const FillCaps& caps) {
  FlRatio r;
  for (const auto& loop : reduced_loops(x, max_loop_len)) {
    ++r.loops;
    const auto f = filling_length(loop, x, caps.max_len, caps.max_states);
    if (!f.fl) {
      ++r.capped;
      continue;
    }
    if (!r.witness || *f.fl * r.denominator > r.numerator * loop.length()) {
      r.numerator = *f.fl;
      r.denominator = loop.length();
      r.witness = loop;
    }
  }
  return r;
}

std::vector<GrowthRow> growth_probe(const std::vector<std::uint64_t>& ns, const FillCaps& caps) {
  std::vector<GrowthRow> rows;
  for (const auto n : ns) {
    const auto p = build_Pn(n);
    const auto x = presentation_complex(p);
    for (Gen g = 0; g < p.num_generators(); ++g) {
      const auto f = filling_length(loop_of(Word::generator(g)), x, caps.max_len, caps.max_states);
      GrowthRow row;
      row.n = n;
      row.generator = std::string(1, p.alphabet().symbol(g));
      row.fl_or_bound = f.fl ? std::to_string(*f.fl) : ">" + std::to_string(f.lower_bound - 1);
      row.states = f.states;
      row.capped = f.capped;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::string out = "n,generator,fl_or_bound,states,capped\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + r.generator + "," + r.fl_or_bound + "," + std::to_string(r.states) + "," +
           (r.capped ? "true" : "false") + "\n";
  }
  return out;
}

std::string growth_json(const std::vector<GrowthRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n}, {"generator", r.generator}, {"fl_or_bound", r.fl_or_bound}, {"states", r.states},
                   {"capped", r.capped}});
  }
  return arr.dump();
}

std::vector<GrowthRow> parse_growth_json(std::string_view text) {
  std::vector<GrowthRow> rows;
  try {
    for (const auto& j : nlohmann::json::parse(text)) {
      GrowthRow r;
      r.n = j.at("n").get<std::uint64_t>();
      r.generator = j.at("generator").get<std::string>();
      r.fl_or_bound = j.at("fl_or_bound").get<std::string>();
      r.states = j.at("states").get<std::size_t>();
      r.capped = j.at("capped").get<bool>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("growth table: ") + e.what());
  }
  return rows;
}

}  // namespace bptk
