#pragma once

// Pure simplicial complexes given by their facets, with pseudomanifold and
// link-condition validation.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bptk {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;  // sorted, distinct

class Triangulation {
 public:
  Triangulation() = default;
  // Each facet is sorted and the facet list sorted. Throws
  // std::invalid_argument unless every facet has dim+1 distinct vertices.
  // Duplicate facets are kept so that validate() can report them.
  Triangulation(unsigned dim, std::vector<Simplex> facets);

  unsigned dim() const noexcept { return dim_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  std::vector<Vertex> vertices() const;
  std::size_t num_vertices() const { return vertices().size(); }
  // f[i] = number of distinct i-faces, i = 0..dim.
  std::vector<std::size_t> f_vector() const;
  std::int64_t euler() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  unsigned dim_ = 0;
  std::vector<Simplex> facets_;
};

// Boundary of the simplex on vertices 0..n, a triangulated (n-1)-sphere.
// Throws std::invalid_argument for n < 2.
Triangulation boundary_of_simplex(unsigned n);

// Facets containing v with v removed.
Triangulation link(const Triangulation& t, Vertex v);
// Facets containing every vertex of face, with the face removed.
std::vector<Simplex> link_of_face(const Triangulation& t, const Simplex& face);

enum class ValidationLevel { pseudomanifold, links };

struct Violation {
  std::string rule;
  Simplex face;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;  // no violations
  std::vector<Violation> violations;
  // Vertices whose links passed every necessary check but could not be
  // recognized as spheres within the search caps.
  std::vector<Vertex> undetermined;
};

// pseudomanifold: every ridge lies in exactly two facets.
// links: additionally no duplicate facets and every vertex link is a
// sphere. Spheres of dimension <= 2 are recognized exactly; higher ones are
// checked for necessary conditions and then reduced toward the simplex
// boundary by a capped move search, with failure reported as undetermined.
ValidationReport validate(const Triangulation& t, ValidationLevel level);

// Sphere recognition used for links; exposed for testing.
enum class SphereVerdict { sphere, not_sphere, undetermined };
SphereVerdict classify_sphere(const Triangulation& t, std::string* why = nullptr);

// File format: first line "dim d", then one facet per line as vertex
// integers. Blank lines and lines starting with '#' are ignored.
Triangulation parse_triangulation(std::string_view text);
std::string to_text(const Triangulation& t);
std::string to_string(const Simplex& s);

}  // namespace bptk
