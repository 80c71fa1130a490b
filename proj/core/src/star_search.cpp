#include "fanfree/error.hpp"
#include "fanfree/star.hpp"

#include <algorithm>
#include <cstdint>

namespace fanfree {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

/**
 * Depth-first branch and bound over candidate (start, exit) pairs in lexicographic order.
 *
 * Arrows sharing an exit edge are placed in nested order. Nested order produces a subset of
 * the crossings of any other slot order on that edge (arrows on the same edge never cross,
 * crossings with arrows on other edges do not depend on slots), so it is the only order the
 * search needs to visit.
 */
class StarSearch {
 public:
  StarSearch(int m, int k, const SearchFilter& filter, const SearchOptions& options)
      : m_(m), k_(k), filter_(filter), options_(options) {
    for (int s = 0; s < m; ++s) {
      for (int j = 0; j < m; ++j) {
        if (!legal_arrow(m, s, j)) continue;
        const int forward = mod(j - s, m);
        const int length = std::min(forward, m - 1 - forward);
        if (filter.kind == SearchFilter::Kind::long_only && length < 2) continue;
        cand_.push_back({s, j});
      }
    }
    const std::size_t c = cand_.size();
    crosses_.resize(c);
    for (std::size_t x = 0; x < c; ++x) {
      for (std::size_t y = 0; y < c; ++y) {
        if (x != y && chords_cross(cand_[x], cand_[y])) crosses_[x].push_back(y);
      }
    }
    mult_.assign(c, 0);
    count_.assign(c * static_cast<std::size_t>(m), 0);
    for (std::size_t x = 0; x < c; ++x) {
      ++count_[x * static_cast<std::size_t>(m) + static_cast<std::size_t>(cand_[x].exit)];
      ++count_[x * static_cast<std::size_t>(m) + static_cast<std::size_t>(mod(cand_[x].exit + 1, m))];
    }
    used_start_.assign(static_cast<std::size_t>(m), 0);
    first_after_zero_ = 0;
    while (first_after_zero_ < c && cand_[first_after_zero_].start == 0) ++first_after_zero_;
  }

  SearchResult run() {
    result_ = SearchResult{};
    best_ = -1;
    // the empty star is the only configuration without an arrow at v_0
    if (accepts_leaf()) record(0);
    dfs(0, 0);
    result_.nodes = nodes_;
    return result_;
  }

 private:
  struct Pair {
    int start;
    int exit;
  };

  bool chords_cross(const Pair& a, const Pair& b) const {
    if (a.start == b.start || a.exit == b.exit) return false;
    int a1 = 2 * a.start;
    int a2 = 2 * a.exit + 1;
    if (a1 > a2) std::swap(a1, a2);
    const int b1 = 2 * b.start;
    const int b2 = 2 * b.exit + 1;
    return (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2);
  }

  int& count(std::size_t x, int v) { return count_[x * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v)]; }

  int max_addable(std::size_t x) {
    const int cap = k_ - 1;
    for (int v = 0; v < m_; ++v) {
      if (count(x, v) > cap) return 0;
    }
    int room = cap;
    const int s = cand_[x].start;
    for (std::size_t y : crosses_[x]) {
      if (mult_[y] > 0) room = std::min(room, cap - count(y, s));
    }
    return std::max(room, 0);
  }

  void apply(std::size_t x, int mu) {
    const int s = cand_[x].start;
    for (std::size_t z : crosses_[x]) count(z, s) += mu;
    mult_[x] = mu;
    used_start_[static_cast<std::size_t>(s)] += mu > 0 ? 1 : 0;
    distinct_starts_ += (mu > 0 && used_start_[static_cast<std::size_t>(s)] == 1) ? 1 : 0;
  }

  void undo(std::size_t x, int mu) {
    const int s = cand_[x].start;
    for (std::size_t z : crosses_[x]) count(z, s) -= mu;
    if (mu > 0) {
      if (used_start_[static_cast<std::size_t>(s)] == 1) --distinct_starts_;
      --used_start_[static_cast<std::size_t>(s)];
    }
    mult_[x] = 0;
  }

  bool accepts_leaf() const {
    if (filter_.kind != SearchFilter::Kind::class_constrained) return true;
    std::vector<int> table(static_cast<std::size_t>(m_ * m_), 0);
    for (std::size_t x = 0; x < cand_.size(); ++x) {
      table[static_cast<std::size_t>(cand_[x].start * m_ + cand_[x].exit)] = mult_[x];
    }
    return classify_vertices(m_, table).counts == filter_.cls;
  }

  void record(int total) {
    const bool keep_ties = options_.max_witnesses > 1;
    if (total > best_) {
      best_ = total;
      result_.feasible = true;
      result_.maximum = total;
      result_.extremal.clear();
    } else if (total < best_ || !keep_ties || result_.extremal.size() >= options_.max_witnesses) {
      return;
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t x = 0; x < cand_.size(); ++x) {
      for (int r = 0; r < mult_[x]; ++r) pairs.emplace_back(cand_[x].start, cand_[x].exit);
    }
    result_.extremal.push_back(StarConfig::from_pairs(m_, pairs));
  }

  void dfs(std::size_t i, int total) {
    if (++nodes_ > options_.node_budget) throw InconclusiveError(nodes_ - 1);
    const std::size_t c = cand_.size();
    if (i >= first_after_zero_ && used_start_[0] == 0) return;
    const bool constrained = filter_.kind == SearchFilter::Kind::class_constrained;
    if (constrained) {
      const int h = filter_.cls.heavy;
      if (distinct_starts_ > h) return;
      if (i < c) {
        const int s = cand_[i].start;
        const int remaining = (m_ - 1 - s) + (used_start_[static_cast<std::size_t>(s)] == 0 ? 1 : 0);
        if (distinct_starts_ + remaining < h) return;
      } else if (distinct_starts_ != h) {
        return;
      }
    }
    if (i == c) {
      if (accepts_leaf()) record(total);
      return;
    }
    int optimistic = total;
    for (std::size_t z = i; z < c; ++z) optimistic += max_addable(z);
    const bool keep_ties = options_.max_witnesses > 1;
    if (optimistic < best_ || (!keep_ties && optimistic <= best_ && best_ >= 0)) return;

    const int top = max_addable(i);
    for (int mu = top; mu >= 0; --mu) {
      if (mu > 0) apply(i, mu);
      dfs(i + 1, total + mu);
      if (mu > 0) undo(i, mu);
    }
  }

  int m_;
  int k_;
  SearchFilter filter_;
  SearchOptions options_;
  std::vector<Pair> cand_;
  std::vector<std::vector<std::size_t>> crosses_;
  std::vector<int> mult_;
  std::vector<int> count_;
  std::vector<int> used_start_;
  int distinct_starts_ = 0;
  std::size_t first_after_zero_ = 0;
  int best_ = -1;
  std::uint64_t nodes_ = 0;
  SearchResult result_;
};

}  // namespace

SearchResult max_arrows(int m, int k, const SearchFilter& filter, const SearchOptions& options) {
  if (m < 3) throw DomainError("a star needs at least 3 vertices");
  if (k < 2) throw DomainError("k must be at least 2");
  if (filter.kind == SearchFilter::Kind::class_constrained) {
    const auto& c = filter.cls;
    if (c.heavy < 0 || c.light < 0 || c.void_count < 0 || c.heavy + c.light + c.void_count != m) {
      throw DomainError("class counts must be non-negative and sum to m");
    }
  }
  StarSearch search(m, k, filter, options);
  return search.run();
}

}  // namespace fanfree
