#include "bptk/coset_enumeration.hpp"

#include <stdexcept>

namespace bptk {

namespace {

constexpr std::int32_t kUndefined = -1;

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets) : ncols_(2 * p.num_generators()), max_(max_cosets) {
    for (const auto& r : p.relators()) {
      if (r.empty()) throw std::invalid_argument("coset_enumerate: empty relator");
      for (const Word& w : {r, r.inverse()}) {
        std::vector<std::uint32_t> cols;
        for (const Letter l : w.letters()) cols.push_back(l.code());
        sequences_.push_back(std::move(cols));
      }
    }
    cycles_by_first_.resize(ncols_);
    for (std::uint32_t s = 0; s < sequences_.size(); ++s) {
      for (std::uint32_t k = 0; k < sequences_[s].size(); ++k) cycles_by_first_[sequences_[s][k]].push_back({s, k});
    }
  }

  bool run() {
    if (max_ == 0) return false;
    new_row();
    for (;;) {
      if (!define_all()) return false;
      if (!verify_pass()) break;
    }
    return true;
  }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < nrows_; ++c) n += parent_[c] == static_cast<std::int32_t>(c);
    return n;
  }

  CosetEnumerationResult stats() const {
    CosetEnumerationResult r;
    r.cosets_defined = nrows_;
    r.max_live = max_live_;
    r.coincidences = coincidences_;
    r.deductions = deductions_processed_;
    return r;
  }

  CosetTable table() const {
    CosetTable t;
    t.columns = ncols_;
    std::vector<std::size_t> renumber(nrows_, 0);
    std::size_t next = 0;
    for (std::size_t c = 0; c < nrows_; ++c) {
      if (live(static_cast<std::int32_t>(c))) renumber[c] = next++;
    }
    for (std::size_t c = 0; c < nrows_; ++c) {
      if (!live(static_cast<std::int32_t>(c))) continue;
      std::vector<std::size_t> row(ncols_);
      for (std::size_t col = 0; col < ncols_; ++col) row[col] = renumber[static_cast<std::size_t>(at(static_cast<std::int32_t>(c), col))];
      t.rows.push_back(std::move(row));
    }
    return t;
  }

 private:
  struct Cycle {
    std::uint32_t seq;
    std::uint32_t offset;
  };

  std::int32_t& at(std::int32_t c, std::size_t col) { return table_[static_cast<std::size_t>(c) * ncols_ + col]; }
  std::int32_t at(std::int32_t c, std::size_t col) const { return table_[static_cast<std::size_t>(c) * ncols_ + col]; }
  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const auto next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  std::int32_t new_row() {
    const auto c = static_cast<std::int32_t>(nrows_++);
    table_.resize(nrows_ * ncols_, kUndefined);
    parent_.push_back(c);
    ++live_;
    if (live_ > max_live_) max_live_ = live_;
    return c;
  }

  // Felsch: fill the table in coset order, processing all deductions after
  // each definition.
  bool define_all() {
    process_deductions();
    for (std::size_t c = 0; c < nrows_; ++c) {
      const auto cc = static_cast<std::int32_t>(c);
      for (std::size_t col = 0; col < ncols_ && live(cc); ++col) {
        if (at(cc, col) != kUndefined) continue;
        if (nrows_ >= max_) return false;
        const auto d = new_row();
        at(cc, col) = d;
        at(d, col ^ 1) = cc;
        deductions_.push_back({cc, static_cast<std::uint32_t>(col)});
        process_deductions();
      }
    }
    return true;
  }

  // Rescans every relator at every live coset; returns true if anything
  // changed, in which case definitions resume.
  bool verify_pass() {
    const auto before = events_;
    for (std::size_t c = 0; c < nrows_; ++c) {
      for (std::uint32_t s = 0; s < sequences_.size(); s += 2) {
        if (!live(static_cast<std::int32_t>(c))) break;
        scan(static_cast<std::int32_t>(c), {s, 0});
        process_deductions();
      }
    }
    return events_ != before;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, col] = deductions_.back();
      deductions_.pop_back();
      ++deductions_processed_;
      if (!live(c)) continue;
      for (const auto& cy : cycles_by_first_[col]) {
        scan(c, cy);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      const auto d = at(c, col);
      if (d == kUndefined || !live(d)) continue;
      for (const auto& cy : cycles_by_first_[col ^ 1]) {
        scan(d, cy);
        if (!live(d)) break;
      }
    }
  }

  // Scan a relator cycle at coset a, deducing a single missing entry or
  // detecting a coincidence. Never defines new cosets.
  void scan(std::int32_t a, Cycle cy) {
    const auto& seq = sequences_[cy.seq];
    const std::size_t n = seq.size();
    auto letter = [&](std::size_t k) { return seq[(cy.offset + k) % n]; };
    std::int32_t f = a;
    std::size_t i = 0;
    while (i < n && at(f, letter(i)) != kUndefined) f = at(f, letter(i++));
    if (i == n) {
      if (f != a) coincidence(f, a);
      return;
    }
    std::int32_t b = a;
    std::size_t j = n;  // letters [j, n) traced backwards
    while (j > i && at(b, letter(j - 1) ^ 1) != kUndefined) b = at(b, letter(--j) ^ 1);
    if (j == i) {
      if (f != b) coincidence(f, b);
    } else if (j == i + 1) {
      const auto col = letter(i);
      at(f, col) = b;
      at(b, col ^ 1) = f;
      ++events_;
      deductions_.push_back({f, col});
    }
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& queue) {
    const auto phi = rep(k);
    const auto psi = rep(l);
    if (phi == psi) return;
    const auto mu = std::min(phi, psi);
    const auto nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    --live_;
    queue.push_back(nu);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    ++coincidences_;
    ++events_;
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto g = queue[q];
      for (std::size_t col = 0; col < ncols_; ++col) {
        const auto d = at(g, col);
        if (d == kUndefined) continue;
        at(d, col ^ 1) = kUndefined;
        const auto mu = rep(g);
        const auto nu = rep(d);
        if (at(mu, col) != kUndefined) {
          merge(nu, at(mu, col), queue);
        } else if (at(nu, col ^ 1) != kUndefined) {
          merge(mu, at(nu, col ^ 1), queue);
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
          deductions_.push_back({mu, static_cast<std::uint32_t>(col)});
        }
      }
    }
  }

  std::size_t ncols_;
  std::size_t max_;
  std::vector<std::vector<std::uint32_t>> sequences_;
  std::vector<std::vector<Cycle>> cycles_by_first_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::size_t nrows_ = 0;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  std::size_t coincidences_ = 0;
  std::size_t deductions_processed_ = 0;
  std::size_t events_ = 0;
  std::vector<std::pair<std::int32_t, std::uint32_t>> deductions_;
};

}  // namespace

CosetEnumerationResult coset_enumerate(const Presentation& p, std::size_t max_cosets) {
  Enumerator e(p, max_cosets);
  const bool done = e.run();
  auto r = e.stats();
  if (done) r.order = e.live_count();
  return r;
}

std::optional<CosetTable> coset_table(const Presentation& p, std::size_t max_cosets) {
  Enumerator e(p, max_cosets);
  if (!e.run()) return std::nullopt;
  return e.table();
}

bool table_is_complete(const CosetTable& table, const Presentation& p) {
  const auto n = table.rows.size();
  if (n == 0 || table.columns != 2 * p.num_generators()) return false;
  for (std::size_t c = 0; c < n; ++c) {
    if (table.rows[c].size() != table.columns) return false;
    for (std::size_t col = 0; col < table.columns; ++col) {
      const auto d = table.rows[c][col];
      if (d >= n || table.rows[d][col ^ 1] != c) return false;
    }
  }
  for (const auto& r : p.relators()) {
    const auto letters = r.letters();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t f = c;
      for (const Letter l : letters) f = table.rows[f][l.code()];
      if (f != c) return false;
    }
  }
  return true;
}

}  // namespace bptk
