#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bptk/bistellar.hpp"
#include "bptk/canonical.hpp"
#include "bptk/errors.hpp"
#include "bptk/triangulation.hpp"
#include "oracles.hpp"

using namespace bptk;

namespace {

Triangulation relabel(const Triangulation& t, std::mt19937_64& rng) {
  const auto verts = t.vertices();
  std::vector<Vertex> image(verts.size());
  std::iota(image.begin(), image.end(), Vertex{3});
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<Simplex> fs;
  for (const auto& f : t.facets()) {
    Simplex g;
    for (const auto v : f) g.push_back(image[std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()]);
    fs.push_back(g);
  }
  std::shuffle(fs.begin(), fs.end(), rng);
  return Triangulation(t.dim(), fs);
}

std::vector<Simplex> sorted_facets(const Triangulation& t) {
  auto fs = t.facets();
  std::sort(fs.begin(), fs.end());
  return fs;
}

Triangulation torus7() {
  std::vector<Simplex> fs;
  for (Vertex i = 0; i < 7; ++i) {
    fs.push_back({i, (i + 1) % 7, (i + 3) % 7});
    fs.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Triangulation(2, fs);
}

}  // namespace

TEST_SUITE("pachner") {
  TEST_CASE("simplex boundaries") {
    const auto s3 = boundary_of_simplex(4);
    CHECK(s3.dim() == 3);
    CHECK(s3.f_vector() == std::vector<std::size_t>{5, 10, 10, 5});
    CHECK(s3.euler() == 0);
    CHECK(boundary_of_simplex(3).euler() == 2);
    CHECK(validate(s3, ValidationLevel::links).valid);
    CHECK(classify_sphere(s3) == SphereVerdict::sphere);
    CHECK(link(s3, 0).facets().size() == 4);
    CHECK(link_of_face(s3, {0, 1}).size() == 3);
  }

  TEST_CASE("validation finds broken ridges and bad links") {
    auto fs = boundary_of_simplex(3).facets();
    fs.pop_back();
    const auto r = validate(Triangulation(2, fs), ValidationLevel::pseudomanifold);
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].rule == "ridge");

    // Two tetrahedron boundaries sharing vertex 0.
    const auto tetra = boundary_of_simplex(3);
    auto pinched = tetra.facets();
    for (const auto& f : tetra.facets()) {
      Simplex g;
      for (const auto v : f) g.push_back(v == 0 ? 0 : v + 3);
      pinched.push_back(g);
    }
    const Triangulation t(2, pinched);
    CHECK(validate(t, ValidationLevel::pseudomanifold).valid);
    const auto links = validate(t, ValidationLevel::links);
    CHECK_FALSE(links.valid);
    CHECK(links.violations[0].rule == "link");

    CHECK(classify_sphere(torus7()) == SphereVerdict::not_sphere);
    CHECK(validate(torus7(), ValidationLevel::links).valid);
  }

  TEST_CASE("triangulation text format") {
    const auto t = boundary_of_simplex(4);
    CHECK(parse_triangulation(to_text(t)) == t);
    try {
      parse_triangulation("dim 2\n0 1 2\n0 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_triangulation("0 1 2\n"), ParseError);
    CHECK_THROWS(Triangulation(2, {{0, 0, 1}}));
  }

  TEST_CASE("move enumeration matches a brute-force link scan") {
    std::mt19937_64 rng(5);
    for (unsigned d : {2u, 3u}) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto walk = random_walk(boundary_of_simplex(d + 1), 6, seed, d + 5);
        for (const std::size_t cap : {d + 3, d + 6}) {
          std::set<std::string> got;
          for (const auto& m : enumerate_moves(walk.final, cap)) got.insert(to_string(m));
          CHECK(got == oracle::brute_moves(walk.final, cap));
        }
      }
    }
  }

  TEST_CASE("moves change facet counts and invert") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto t = random_walk(boundary_of_simplex(4), 10, seed, 9).final;
      for (const auto& m : enumerate_moves(t, 10)) {
        const auto u = apply_move(t, m);
        CHECK(u.facets().size() + m.facets_removed() == t.facets().size() + m.facets_added());
        CHECK(m.facets_removed() + m.facets_added() == t.dim() + 2);
        CHECK(validate(u, ValidationLevel::pseudomanifold).valid);
        CHECK(u.euler() == t.euler());
        const auto back = apply_move(u, inverse(m));
        CHECK(sorted_facets(back) == sorted_facets(t));
        CHECK(parse_move(to_string(m)) == m);
      }
    }
  }

  TEST_CASE("invalid moves are rejected") {
    const auto t = boundary_of_simplex(3);
    CHECK_THROWS_AS(apply_move(t, parse_move("0 1 -> 2 3")), InvalidMove);
    CHECK_THROWS_AS(apply_move(t, parse_move("0 1 2 -> 3")), InvalidMove);
    CHECK_THROWS_AS(apply_move(t, parse_move("0 -> 1 2 3")), InvalidMove);
    CHECK_THROWS_AS(parse_move("0 1 2"), ParseError);
  }

  TEST_CASE("walks are reproducible") {
    const auto a = random_walk(boundary_of_simplex(4), 50, 42, 9);
    const auto b = random_walk(boundary_of_simplex(4), 50, 42, 9);
    CHECK(a.moves == b.moves);
    CHECK(a.f_trace.size() == 51);
    CHECK(a.f_trace.back() == a.final.f_vector());
    CHECK(a.final.num_vertices() <= 9);
  }

  TEST_CASE("canonical form agrees with all-permutation search") {
    std::mt19937_64 rng(9);
    std::vector<Triangulation> pool;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      pool.push_back(random_walk(boundary_of_simplex(3), 5, seed, 7).final);
      pool.push_back(random_walk(boundary_of_simplex(4), 4, seed, 7).final);
    }
    pool.push_back(torus7());
    for (const auto& t : pool) {
      const auto r = relabel(t, rng);
      CHECK(canonical_form(r) == canonical_form(t));
      CHECK(isomorphic(r, t));
      CHECK(canonical_key(r) == canonical_key(t));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (pool[i].dim() != pool[j].dim()) continue;
        const bool brute = oracle::brute_canonical(pool[i]) == oracle::brute_canonical(pool[j]);
        CHECK(isomorphic(pool[i], pool[j]) == brute);
      }
    }
  }

  TEST_CASE("bistellar distance") {
    const auto s2 = boundary_of_simplex(3);
    CHECK(bfs_distance(s2, s2, {}).distance == std::optional<std::size_t>(0));
    const auto one = apply_move(s2, enumerate_moves(s2).front());
    CHECK(bfs_distance(s2, one, {}).distance == std::optional<std::size_t>(1));
    CHECK(bfs_distance(one, s2, {}).distance == std::optional<std::size_t>(1));
    CHECK_THROWS_AS(bfs_distance(s2, boundary_of_simplex(4), {}), std::invalid_argument);

    // The torus is not reachable from the sphere.
    const auto none = bfs_distance(s2, torus7(), {.max_vertices = 7});
    CHECK_FALSE(none.distance);
    CHECK(none.capped);

    const auto far = random_walk(s2, 8, 1, 8).final;
    const auto lim = bfs_distance(s2, far, {.max_vertices = 8, .max_states = 3});
    if (!lim.distance) CHECK(lim.reason == "max_states");
    const auto a = bfs_distance(s2, far, {.max_vertices = 8, .threads = 1});
    const auto b = bfs_distance(s2, far, {.max_vertices = 8, .threads = 3});
    CHECK(a.distance == b.distance);
    CHECK(a.states == b.states);
  }
}
