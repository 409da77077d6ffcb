#include "bptk/canonical.hpp"

#include <algorithm>
#include <map>

namespace bptk {

namespace {

struct Key {
  std::size_t colour;
  std::vector<Vertex> adjacent;      // earlier labels sharing a facet
  std::vector<Simplex> completed;    // facets whose last label is this one

  friend auto operator<=>(const Key&, const Key&) = default;
  friend bool operator==(const Key&, const Key&) = default;
};

class Labeler {
 public:
  explicit Labeler(const Triangulation& t) : verts_(t.vertices()) {
    const auto n = verts_.size();
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[verts_[i]] = i;
    for (const auto& f : t.facets()) {
      Simplex g;
      for (const auto v : f) g.push_back(static_cast<Vertex>(index[v]));
      facets_.push_back(std::move(g));
    }
    incident_.resize(n);
    adjacent_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      for (const auto v : facets_[i]) {
        incident_[v].push_back(i);
        for (const auto w : facets_[i]) adjacent_[v][w] = adjacent_[v][w] || v != w;
      }
    }
    refine_colours();
    label_.assign(n, kUnlabeled);
  }

  std::vector<Simplex> run() {
    search(0);
    std::vector<Simplex> out;
    for (const auto& key : best_) out.insert(out.end(), key.completed.begin(), key.completed.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr Vertex kUnlabeled = ~Vertex{0};

  // Iterated refinement: a vertex's signature is its colour plus the sorted
  // multiset of colour tuples of its facets. Colours are ranks of distinct
  // signatures, hence independent of the input labels.
  void refine_colours() {
    const auto n = verts_.size();
    colour_.assign(n, 0);
    std::size_t classes = n == 0 ? 0 : 1;
    for (;;) {
      using Sig = std::pair<std::size_t, std::vector<std::vector<std::size_t>>>;
      std::vector<Sig> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].first = colour_[v];
        for (const auto fi : incident_[v]) {
          std::vector<std::size_t> c;
          for (const auto w : facets_[fi]) {
            if (w != v) c.push_back(colour_[w]);
          }
          std::sort(c.begin(), c.end());
          sig[v].second.push_back(std::move(c));
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::vector<Sig> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t v = 0; v < n; ++v) {
        colour_[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      }
      if (distinct.size() == classes) break;
      classes = distinct.size();
    }
  }

  Key key_for(std::size_t v, Vertex pos) const {
    Key k;
    k.colour = colour_[v];
    for (std::size_t w = 0; w < verts_.size(); ++w) {
      if (adjacent_[v][w] && label_[w] != kUnlabeled) k.adjacent.push_back(label_[w]);
    }
    std::sort(k.adjacent.begin(), k.adjacent.end());
    for (const auto fi : incident_[v]) {
      Simplex s;
      bool done = true;
      for (const auto w : facets_[fi]) {
        if (w == v) {
          s.push_back(pos);
        } else if (label_[w] == kUnlabeled) {
          done = false;
          break;
        } else {
          s.push_back(label_[w]);
        }
      }
      if (!done) continue;
      std::sort(s.begin(), s.end());
      k.completed.push_back(std::move(s));
    }
    std::sort(k.completed.begin(), k.completed.end());
    return k;
  }

  void search(Vertex pos) {
    const auto n = verts_.size();
    if (pos == n) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    std::vector<std::pair<Key, std::size_t>> cands;
    for (std::size_t v = 0; v < n; ++v) {
      if (label_[v] == kUnlabeled) cands.emplace_back(key_for(v, pos), v);
    }
    const Key least = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
                        return a.first < b.first;
                      })->first;
    if (!best_.empty() && worse_than_best(pos, least)) return;
    for (const auto& [key, v] : cands) {
      if (!(key == least)) continue;
      label_[v] = pos;
      current_.push_back(key);
      search(pos + 1);
      current_.pop_back();
      label_[v] = kUnlabeled;
    }
  }

  // current_[0, pos) followed by `next` compared with best_[0, pos].
  bool worse_than_best(Vertex pos, const Key& next) const {
    for (Vertex i = 0; i < pos; ++i) {
      if (current_[i] < best_[i]) return false;
      if (best_[i] < current_[i]) return true;
    }
    return best_[pos] < next;
  }

  std::vector<Vertex> verts_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::vector<bool>> adjacent_;
  std::vector<std::size_t> colour_;
  std::vector<Vertex> label_;
  std::vector<Key> current_;
  std::vector<Key> best_;
};

}  // namespace

std::vector<Simplex> canonical_form(const Triangulation& t) { return Labeler(t).run(); }

Triangulation canonical_triangulation(const Triangulation& t) { return Triangulation(t.dim(), canonical_form(t)); }

std::string canonical_key(const Triangulation& t) {
  std::string key;
  key.push_back(static_cast<char>(t.dim()));
  for (const auto& f : canonical_form(t)) {
    for (const auto v : f) {
      for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>(v >> (8 * b) & 0xff));
    }
  }
  return key;
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  return a.dim() == b.dim() && a.facets().size() == b.facets().size() && canonical_form(a) == canonical_form(b);
}

}  // namespace bptk
