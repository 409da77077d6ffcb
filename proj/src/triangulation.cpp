#include "bptk/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bptk/bistellar.hpp"
#include "bptk/errors.hpp"

namespace bptk {

namespace {

// All nonempty subsets of s (sorted input gives sorted subsets).
void for_each_face(const Simplex& s, const std::function<void(const Simplex&)>& fn) {
  const std::size_t n = s.size();
  Simplex face;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    face.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) face.push_back(s[i]);
    }
    fn(face);
  }
}

Simplex without(const Simplex& s, std::size_t i) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != i) out.push_back(s[j]);
  }
  return out;
}

std::map<Simplex, std::size_t> ridge_counts(const Triangulation& t) {
  std::map<Simplex, std::size_t> count;
  for (const auto& f : t.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) ++count[without(f, i)];
  }
  return count;
}

bool has_duplicates(const Triangulation& t) {
  return std::adjacent_find(t.facets().begin(), t.facets().end()) != t.facets().end();
}

bool connected(const Triangulation& t) {
  const auto verts = t.vertices();
  if (verts.empty()) return true;
  std::map<Vertex, Vertex> parent;
  for (auto v : verts) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& f : t.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) parent[find(f[i])] = find(f[0]);
  }
  const auto root = find(verts[0]);
  return std::all_of(verts.begin(), verts.end(), [&](Vertex v) { return find(v) == root; });
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// Necessary conditions shared by every dimension >= 1: no duplicates,
// closed, connected, vertex links spheres of one dimension less.
bool sphere_preconditions(const Triangulation& t, std::string* why, bool& undetermined) {
  if (t.facets().empty()) return fail(why, "no facets");
  if (has_duplicates(t)) return fail(why, "duplicate facet");
  for (const auto& [ridge, n] : ridge_counts(t)) {
    if (n != 2) return fail(why, "ridge " + to_string(ridge) + " in " + std::to_string(n) + " facets");
  }
  if (!connected(t)) return fail(why, "disconnected");
  for (const auto v : t.vertices()) {
    std::string sub;
    switch (classify_sphere(link(t, v), &sub)) {
      case SphereVerdict::sphere:
        break;
      case SphereVerdict::not_sphere:
        return fail(why, "link of vertex " + std::to_string(v) + ": " + sub);
      case SphereVerdict::undetermined:
        undetermined = true;
        break;
    }
  }
  return true;
}

// Greedy facet-reducing moves, then a capped search, toward the boundary
// of a simplex.
bool reduces_to_simplex_boundary(const Triangulation& t) {
  const auto d = t.dim();
  Triangulation cur = t;
  for (bool progress = true; progress;) {
    progress = false;
    if (cur.facets().size() == d + 2) return true;
    for (const auto& m : enumerate_moves(cur)) {
      if (m.facets_removed() > m.facets_added()) {
        cur = apply_move(cur, m);
        progress = true;
        break;
      }
    }
  }
  BistLimits caps;
  caps.max_vertices = cur.num_vertices() + 1;
  caps.max_states = 5000;
  return bfs_distance(cur, boundary_of_simplex(d + 1), caps).distance.has_value();
}

}  // namespace

Triangulation::Triangulation(unsigned dim, std::vector<Simplex> facets) : dim_(dim), facets_(std::move(facets)) {
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    if (f.size() != dim + 1) {
      throw std::invalid_argument("facet " + to_string(f) + " has " + std::to_string(f.size()) +
                                  " vertices, expected " + std::to_string(dim + 1));
    }
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw std::invalid_argument("facet " + to_string(f) + " repeats a vertex");
    }
  }
  std::sort(facets_.begin(), facets_.end());
}

std::vector<Vertex> Triangulation::vertices() const {
  std::vector<Vertex> out;
  for (const auto& f : facets_) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> Triangulation::f_vector() const {
  std::vector<std::set<Simplex>> faces(dim_ + 1);
  for (const auto& f : facets_) for_each_face(f, [&](const Simplex& s) { faces[s.size() - 1].insert(s); });
  std::vector<std::size_t> out;
  for (const auto& s : faces) out.push_back(s.size());
  return out;
}

std::int64_t Triangulation::euler() const {
  std::int64_t chi = 0;
  std::int64_t sign = 1;
  for (const auto n : f_vector()) {
    chi += sign * static_cast<std::int64_t>(n);
    sign = -sign;
  }
  return chi;
}

Triangulation boundary_of_simplex(unsigned n) {
  if (n < 2) throw std::invalid_argument("boundary_of_simplex: need n >= 2");
  std::vector<Simplex> facets;
  Simplex all(n + 1);
  for (Vertex v = 0; v <= n; ++v) all[v] = v;
  for (std::size_t i = 0; i <= n; ++i) facets.push_back(without(all, i));
  return Triangulation(n - 1, std::move(facets));
}

std::vector<Simplex> link_of_face(const Triangulation& t, const Simplex& face) {
  std::vector<Simplex> out;
  for (const auto& f : t.facets()) {
    if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return out;
}

Triangulation link(const Triangulation& t, Vertex v) {
  if (t.dim() == 0) throw std::invalid_argument("link: dimension 0 has empty links");
  return Triangulation(t.dim() - 1, link_of_face(t, {v}));
}

SphereVerdict classify_sphere(const Triangulation& t, std::string* why) {
  if (t.dim() == 0) {
    if (t.facets().size() == 2 && t.facets()[0] != t.facets()[1]) return SphereVerdict::sphere;
    fail(why, std::to_string(t.facets().size()) + " points, not a 0-sphere");
    return SphereVerdict::not_sphere;
  }
  bool undetermined = false;
  if (!sphere_preconditions(t, why, undetermined)) return SphereVerdict::not_sphere;
  if (t.dim() == 1) return SphereVerdict::sphere;
  const auto chi = t.euler();
  const std::int64_t want = t.dim() % 2 == 0 ? 2 : 0;
  if (chi != want) {
    fail(why, "Euler characteristic " + std::to_string(chi));
    return SphereVerdict::not_sphere;
  }
  if (t.dim() == 2) return SphereVerdict::sphere;
  if (undetermined || !reduces_to_simplex_boundary(t)) {
    fail(why, "not recognized within search caps");
    return SphereVerdict::undetermined;
  }
  return SphereVerdict::sphere;
}

ValidationReport validate(const Triangulation& t, ValidationLevel level) {
  ValidationReport r;
  auto violation = [&](std::string rule, Simplex face, std::string detail) {
    r.violations.push_back({std::move(rule), std::move(face), std::move(detail)});
  };
  if (t.facets().empty()) violation("nonempty", {}, "no facets");
  if (t.dim() >= 1) {
    for (const auto& [ridge, n] : ridge_counts(t)) {
      if (n != 2) violation("ridge", ridge, "in " + std::to_string(n) + " facets");
    }
  }
  if (level == ValidationLevel::links) {
    for (auto it = t.facets().begin(); it != t.facets().end(); ++it) {
      if (std::next(it) != t.facets().end() && *it == *std::next(it)) violation("duplicate", *it, "facet listed twice");
    }
    if (t.dim() >= 1) {
      for (const auto v : t.vertices()) {
        std::string why;
        switch (classify_sphere(link(t, v), &why)) {
          case SphereVerdict::sphere:
            break;
          case SphereVerdict::not_sphere:
            violation("link", {v}, why);
            break;
          case SphereVerdict::undetermined:
            r.undetermined.push_back(v);
            break;
        }
      }
    }
  }
  r.valid = r.violations.empty();
  return r;
}

Triangulation parse_triangulation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<unsigned> dim;
  std::vector<Simplex> facets;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (!dim) {
      std::string kw;
      long long d = -1;
      std::string extra;
      if (!(ls >> kw >> d) || kw != "dim" || d < 0 || (ls >> extra)) throw ParseError("expected \"dim <d>\"", lineno);
      dim = static_cast<unsigned>(d);
      continue;
    }
    Simplex f;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-' || v > 0xffffffffull) throw ParseError("bad vertex \"" + tok + "\"", lineno);
      f.push_back(static_cast<Vertex>(v));
    }
    try {
      Triangulation(*dim, {f});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
    facets.push_back(std::move(f));
  }
  if (!dim) throw ParseError("missing \"dim <d>\" line", lineno);
  return Triangulation(*dim, std::move(facets));
}

std::string to_text(const Triangulation& t) {
  std::string out = "dim " + std::to_string(t.dim()) + "\n";
  for (const auto& f : t.facets()) out += to_string(f) + "\n";
  return out;
}

std::string to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace bptk
