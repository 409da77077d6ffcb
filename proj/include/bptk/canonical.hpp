#pragma once

// Canonical vertex labeling of triangulations. Vertices are first coloured
// by iterated refinement of facet-incidence signatures; labels 0, 1, ... are
// then assigned by a search that keeps, at each position, only the vertices
// minimizing (colour, adjacent earlier labels, facets completed by this
// label). The lexicographically least sequence of these keys wins; the
// facets it completes, relabeled and sorted, are the canonical form.

#include <string>
#include <vector>

#include "bptk/triangulation.hpp"

namespace bptk {

std::vector<Simplex> canonical_form(const Triangulation& t);

// Same labeling, returned as a triangulation.
Triangulation canonical_triangulation(const Triangulation& t);

// Compact byte key of dim and canonical form, usable for hashing.
std::string canonical_key(const Triangulation& t);

bool isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace bptk
