// One PASS/FAIL line per acceptance criterion. Optional arguments: path to
// the bptk executable, used for the exit-code check of criterion 8, then
// criterion numbers to run (default all).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "bptk/bistellar.hpp"
#include "bptk/canonical.hpp"
#include "bptk/cli.hpp"
#include "bptk/coset_enumeration.hpp"
#include "bptk/dehn.hpp"
#include "bptk/filling.hpp"
#include "oracles.hpp"

using namespace bptk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::string codes_of(const Word& w) {
  std::string s;
  for (const Letter l : w.letters()) s.push_back(static_cast<char>(l.code()));
  return s;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Check criterion1() {
  Check c;
  const auto t0 = Clock::now();
  for (std::uint64_t n = 1; n <= 1024; ++n) {
    const auto p = build_Pn(n);
    unsigned k = 0;
    while ((n >> (k + 1)) != 0) ++k;
    const std::uint64_t len = build_v(n).length();
    c.expect(p.num_generators() == 2 && p.num_relators() == 2, "shape at n=" + std::to_string(n));
    c.expect(len == 6 * (std::uint64_t{1} << k) - 5, "|v_n| at n=" + std::to_string(n));
    c.expect(len <= 6 * n, "|v_n| <= 6n at n=" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  c.expect(s < 1.0, "runtime " + fixed(s) + " s");
  c.first_failure += (c.first_failure.empty() ? "" : "; ") + std::string("n=1..1024 in ") + fixed(s) + " s";
  return c;
}

Check criterion2() {
  Check c;
  std::string detail;
  for (std::uint64_t n = 1; n <= 3; ++n) {
    const auto t0 = Clock::now();
    const auto r = coset_enumerate(build_Pn(n), 1'000'000);
    const double s = seconds_since(t0);
    c.expect(r.order == std::optional<std::size_t>(1), "P" + std::to_string(n) + " order");
    c.expect(s < 60, "P" + std::to_string(n) + " time");
    detail += "P" + std::to_string(n) + ": " + std::to_string(r.cosets_defined) + " cosets " + fixed(s) + " s; ";
  }
  c.expect(coset_enumerate(parse_presentation("gens: x\nrel: x^5\n"), 1000).order == std::optional<std::size_t>(5),
           "<x|x^5>");
  c.expect(coset_enumerate(parse_presentation("gens: a b\nrel: a^3\nrel: b^2\nrel: abab\n"), 1000).order ==
               std::optional<std::size_t>(6),
           "<a,b|a^3,b^2,(ab)^2>");
  if (c.ok) c.first_failure = detail + "orders 5 and 6";
  return c;
}

Check criterion3() {
  Check c;
  const auto bg = baumslag_gersten();
  std::string detail;
  for (unsigned m = 0; m <= 2; ++m) {
    const auto t0 = Clock::now();
    const auto r = power_check(m, {.max_len = 32});
    const auto& p = r.probe;
    c.expect(p.applications.has_value(), "m=" + std::to_string(m) + " certified");
    c.expect(replay_certificate(bg, p.word, p.certificate) == p.applications, "m=" + std::to_string(m) + " replay");
    detail += "m=" + std::to_string(m) + ": " + (p.applications ? std::to_string(*p.applications) : "-") + " (" +
              fixed(seconds_since(t0)) + " s); ";
    if (m == 1) {
      const auto brute = oracle::dehn_bfs({codes_of(bg.relators()[0])}, codes_of(p.word), 32, 2'000'000);
      c.expect(p.applications == std::optional<std::size_t>(1), "m=1 count is 1");
      c.expect(brute == p.applications, "m=1 brute-force oracle");
    }
  }
  if (c.ok) c.first_failure = detail + "m=1 matches brute force";
  return c;
}

Check criterion4() {
  Check c;
  const auto t0 = Clock::now();
  const auto start = boundary_of_simplex(5);
  std::size_t steps = 0;
  const auto observer = [&](const Triangulation& before, const BistellarMove& m, const Triangulation& after) {
    ++steps;
    const std::string at = " at step " + std::to_string(steps);
    c.expect(validate(after, ValidationLevel::pseudomanifold).valid, "pseudomanifold" + at);
    c.expect(after.euler() == 2, "euler" + at);
    const auto delta = static_cast<long>(after.facets().size()) - static_cast<long>(before.facets().size());
    c.expect(delta == 6 - 2 * static_cast<long>(m.facets_removed()), "facet count" + at);
    c.expect(canonical_form(apply_move(after, inverse(m))) == canonical_form(before), "inverse" + at);
    c.expect(after.num_vertices() <= 10, "vertex cap" + at);
  };
  const auto walk = random_walk(start, 10'000, 2024, 10, observer);
  const double s = seconds_since(t0);
  c.expect(walk.moves.size() == 10'000 && steps == 10'000, "walk length");
  c.expect(s < 300, "runtime");
  if (c.ok) c.first_failure = "10000 steps on the 4-sphere in " + fixed(s) + " s";
  return c;
}

Check criterion5() {
  Check c;
  const auto s3 = boundary_of_simplex(4);
  c.expect(bfs_distance(s3, s3, {}).distance == std::optional<std::size_t>(0), "d(t,t)");
  BistellarMove one_four{s3.facets().front(), {5}};
  const auto image = apply_move(s3, one_four);
  c.expect(bfs_distance(s3, image, {}).distance == std::optional<std::size_t>(1), "1-4 image");
  const auto s2 = boundary_of_simplex(3);
  std::size_t largest = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto a = random_walk(s2, 5 + i, 100 + i, 9).final;
    const auto b = random_walk(s2, 25 - i, 200 + i, 9).final;
    const BistLimits lim{.max_vertices = 9, .max_states = 100'000};
    const auto ab = bfs_distance(a, b, lim);
    const auto ba = bfs_distance(b, a, lim);
    c.expect(ab.distance.has_value() && ab.distance == ba.distance, "symmetry on pair " + std::to_string(i));
    if (ab.distance) largest = std::max(largest, *ab.distance);
  }
  if (c.ok) c.first_failure = "20 symmetric pairs, largest distance " + std::to_string(largest);
  return c;
}

Check criterion6() {
  Check c;
  std::set<std::vector<Simplex>> seen;
  std::vector<Triangulation> layer{boundary_of_simplex(3)};
  std::vector<Triangulation> all = layer;
  seen.insert(layer[0].facets());
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<Triangulation> next;
    for (const auto& t : layer) {
      for (const auto& m : enumerate_moves(t, 8)) {
        auto u = apply_move(t, m);
        auto key = u.facets();
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) next.push_back(u);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::map<std::vector<Simplex>, std::vector<Simplex>> brute_to_fast, fast_to_brute;
  for (const auto& t : all) {
    const auto brute = oracle::brute_canonical(t);
    const auto fast = canonical_form(t);
    const auto [i, fresh_b] = brute_to_fast.emplace(brute, fast);
    const auto [j, fresh_f] = fast_to_brute.emplace(fast, brute);
    c.expect(i->second == fast, "two canonical forms for one class");
    c.expect(j->second == brute, "one canonical form for two classes");
  }
  if (c.ok) {
    c.first_failure = std::to_string(all.size()) + " triangulations, " + std::to_string(brute_to_fast.size()) +
                      " isomorphism classes";
  }
  return c;
}

Check criterion7() {
  Check c;
  std::mt19937_64 rng(77);
  const std::vector<Presentation> small{
      parse_presentation("gens: a b\nrel: abAB\n"),
      parse_presentation("gens: a\nrel: a^3\n"),
      parse_presentation("gens: a b\nrel: a^2\nrel: bAB\n"),
  };
  const std::vector<Presentation> random_targets{
      parse_presentation("gens: a b\nrel: ab\nrel: aab\n"),
      build_Pn(1),
      parse_presentation("gens: a b\nrel: a^3\nrel: b^2\nrel: abab\n"),
  };
  std::size_t certified = 0;
  auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto x = presentation_complex(random_targets[i % random_targets.size()]);
    std::string w;
    for (auto len = 1 + rng() % 8; len > 0; --len) w.push_back(static_cast<char>(rng() % (2 * x.num_edges())));
    const auto f = filling_length(LoopState(w), x, 12, 20'000);
    c.expect(f.fl ? *f.fl >= w.size() : f.lower_bound >= w.size(), "fl >= length");
    certified += f.fl.has_value();
  }
  const double random_s = seconds_since(t0);
  for (const auto& p : {build_Pn(1), baumslag_gersten(), small[0], small[1], small[2]}) {
    const auto x = presentation_complex(p);
    for (const auto& r : p.relators()) {
      c.expect(filling_length(loop_of(r), x, r.length(), 1'000'000).fl == std::optional<std::size_t>(r.length()),
               "relator boundary");
    }
  }
  std::size_t compared = 0;
  t0 = Clock::now();
  for (const auto& p : small) {
    const auto x = presentation_complex(p);
    const std::size_t letters = 2 * x.num_edges();
    std::set<std::string> loops{""};
    std::vector<std::string> frontier{""};
    for (int len = 1; len <= 6; ++len) {
      std::vector<std::string> next;
      for (const auto& w : frontier) {
        for (std::size_t l = 0; l < letters; ++l) next.push_back(w + static_cast<char>(l));
      }
      for (const auto& w : next) loops.insert(LoopState(w).codes());
      frontier = std::move(next);
    }
    for (const auto& w : loops) {
      const auto got = filling_length(LoopState(w), x, 8, 1'000'000);
      c.expect(got.fl == oracle::filling_threshold(w, x.cells(), letters, 8), "exhaustive comparison");
      ++compared;
    }
  }
  if (c.ok) {
    c.first_failure = "1000 random loops (" + std::to_string(certified) + " certified, " + fixed(random_s) + " s), " +
                      std::to_string(compared) + " loops compared exhaustively (" + fixed(seconds_since(t0)) + " s)";
  }
  return c;
}

int exit_code_of(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Check criterion8(const std::string& binary) {
  Check c;
  const auto t0 = Clock::now();
  const auto r = dehn_probe(baumslag_gersten(), build_w(64), {.max_len = 64, .max_states = 1'000'000});
  c.expect(r.capped && !r.applications, "library probe capped");
  const std::vector<std::string> args{"dehn", "probe", "--wn", "64", "--max-len", "64", "--max-states", "1000000"};
  std::ostringstream out, err;
  const int in_process = cli::run(args, out, err);
  c.expect(in_process == 2, "cli exit code " + std::to_string(in_process));
  if (!binary.empty()) {
    std::string cmd = "'" + binary + "'";
    for (const auto& a : args) cmd += " " + a;
    const int code = exit_code_of(cmd + " > /dev/null");
    c.expect(code == 2, "executable exit code " + std::to_string(code));
  }
  if (c.ok) {
    c.first_failure = "capped (" + r.reason + ", " + std::to_string(r.states) + " states), exit 2, " +
                      fixed(seconds_since(t0)) + " s";
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  std::set<std::size_t> only;
  for (int i = 2; i < argc; ++i) only.insert(std::stoul(argv[i]));
  const std::vector<std::function<Check()>> criteria{
      criterion1, criterion2, criterion3, criterion4,
      criterion5, criterion6, criterion7, [&] { return criterion8(binary); },
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    Check c;
    const auto t0 = Clock::now();
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.first_failure = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << " - " << c.first_failure << " ["
              << fixed(seconds_since(t0)) << " s]" << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
