#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup, Felsch strategy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bptk/presentation.hpp"

namespace bptk {

struct CosetEnumerationResult {
  // Index of the trivial subgroup, i.e. the group order, when the table
  // closed within the coset limit.
  std::optional<std::size_t> order;
  std::size_t cosets_defined = 0;
  std::size_t max_live = 0;
  std::size_t coincidences = 0;
  std::size_t deductions = 0;
};

// Throws std::invalid_argument if some relator is empty. Overflow (more
// than max_cosets table rows) yields an empty `order`.
CosetEnumerationResult coset_enumerate(const Presentation& p, std::size_t max_cosets);

// Completed coset table, exposed for checking. Rows are live cosets
// renumbered 0..order-1 in definition order, row 0 the subgroup coset;
// column 2g is generator g, column 2g+1 its inverse.
struct CosetTable {
  std::size_t columns = 0;
  std::vector<std::vector<std::size_t>> rows;
};

std::optional<CosetTable> coset_table(const Presentation& p, std::size_t max_cosets);

// Every entry defined, inverse columns consistent, and every relator traces
// a closed loop from every coset.
bool table_is_complete(const CosetTable& table, const Presentation& p);

}  // namespace bptk
