#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexcone/error.hpp"

namespace lexcone {

// Labels of product elements are "s|t"; user-supplied labels may not contain
// the separator.
inline constexpr char kProductSeparator = '|';

// A copy of the canonical non-forest: s < m, t < m, s and t incomparable.
struct Wedge {
  std::string s, t, m;
  friend bool operator==(const Wedge&, const Wedge&) = default;
};

struct Tree {
  std::string root;
  std::vector<std::string> members;  // label order, root included
  friend bool operator==(const Tree&, const Tree&) = default;
};

struct ForestReport {
  bool is_forest = true;
  std::optional<Wedge> witness;  // set iff !is_forest
  std::vector<Tree> trees;       // set iff is_forest, ordered by root label
};

// Finite strict partial order on string labels.
//
// Elements are stored in label order, so element indices double as the
// canonical tie-break order. The strict relation is kept as its full
// transitive closure. Instances are immutable and cheap to copy.
class Poset {
 public:
  using Relation = std::vector<std::pair<std::string, std::string>>;

  Poset() : Poset(std::vector<std::string>{}, {}) {}

  // Builds the transitive closure of a Hasse diagram. Throws CycleError if the
  // closure is not irreflexive, UnknownLabel for covers naming unknown
  // elements, InvalidLabel for empty, duplicate or separator-bearing labels.
  static Poset from_covers(const std::vector<std::string>& elements, const Relation& covers) {
    std::vector<std::string> labels = elements;
    for (const auto& l : labels) {
      if (l.empty()) throw InvalidLabel("empty label");
      if (l.find(kProductSeparator) != std::string::npos)
        throw InvalidLabel("label '" + l + "' contains reserved separator '|'");
    }
    std::sort(labels.begin(), labels.end());
    if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end())
      throw InvalidLabel("duplicate label '" + *dup + "'");

    const std::size_t n = labels.size();
    std::vector<std::uint8_t> lt(n * n, 0);
    auto find = [&](const std::string& l) {
      auto it = std::lower_bound(labels.begin(), labels.end(), l);
      if (it == labels.end() || *it != l) throw UnknownLabel("unknown label '" + l + "'");
      return static_cast<std::size_t>(it - labels.begin());
    };
    for (const auto& [a, b] : covers) lt[find(a) * n + find(b)] = 1;
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (lt[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (lt[k * n + j]) lt[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i * n + i]) throw CycleError("cover relation has a cycle through '" + labels[i] + "'");
    return Poset(std::move(labels), std::move(lt));
  }

  // Chain in the given order: labels[0] < labels[1] < ...
  static Poset chain(const std::vector<std::string>& labels) {
    Relation covers;
    for (std::size_t i = 1; i < labels.size(); ++i) covers.emplace_back(labels[i - 1], labels[i]);
    return from_covers(labels, covers);
  }

  static Poset antichain(const std::vector<std::string>& labels) { return from_covers(labels, {}); }

  std::size_t size() const { return rep_->labels.size(); }
  bool empty() const { return size() == 0; }
  const std::vector<std::string>& labels() const { return rep_->labels; }
  const std::string& label(std::size_t i) const { return rep_->labels.at(i); }

  std::optional<std::size_t> find(std::string_view l) const {
    const auto& ls = rep_->labels;
    auto it = std::lower_bound(ls.begin(), ls.end(), l,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == ls.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - ls.begin());
  }

  bool contains(std::string_view l) const { return find(l).has_value(); }

  std::size_t index(std::string_view l) const {
    if (auto i = find(l)) return *i;
    throw UnknownLabel("unknown label '" + std::string(l) + "'");
  }

  bool less(std::size_t i, std::size_t j) const { return rep_->lt[i * size() + j] != 0; }
  bool less_equal(std::size_t i, std::size_t j) const { return i == j || less(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return less_equal(i, j) || less(j, i); }
  bool less(std::string_view a, std::string_view b) const { return less(index(a), index(b)); }

  std::vector<std::size_t> below(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (less(j, i)) out.push_back(j);
    return out;
  }

  std::vector<std::size_t> above(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) out.push_back(j);
    return out;
  }

  // {t : t < s}
  std::vector<std::string> down_set(std::string_view s) const {
    return select([&, i = index(s)](std::size_t j) { return less(j, i); });
  }
  // {t : t <= s}
  std::vector<std::string> down_closure(std::string_view s) const {
    return select([&, i = index(s)](std::size_t j) { return less_equal(j, i); });
  }
  // {t : t > s}
  std::vector<std::string> strict_up_set(std::string_view s) const {
    return select([&, i = index(s)](std::size_t j) { return less(i, j); });
  }
  // {t : t >= s}
  std::vector<std::string> up_set(std::string_view s) const {
    return select([&, i = index(s)](std::size_t j) { return less_equal(i, j); });
  }
  // S minus {t : t >= s}
  std::vector<std::string> up_set_complement(std::string_view s) const {
    return select([&, i = index(s)](std::size_t j) { return !less_equal(i, j); });
  }

  std::vector<std::size_t> minimal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (is_minimal(i)) out.push_back(i);
    return out;
  }

  bool is_minimal(std::size_t i) const {
    for (std::size_t j = 0; j < size(); ++j)
      if (less(j, i)) return false;
    return true;
  }

  std::vector<std::string> minimal_elements() const {
    return select([&](std::size_t i) { return is_minimal(i); });
  }

  // Elements j with j < i and nothing strictly between.
  std::vector<std::size_t> lower_covers(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(j, i)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size() && covered; ++k)
        if (less(j, k) && less(k, i)) covered = false;
      if (covered) out.push_back(j);
    }
    return out;
  }

  // Hasse diagram, in label order of (lower, upper).
  Relation covers() const {
    Relation out;
    for (std::size_t lo = 0; lo < size(); ++lo)
      for (std::size_t hi = 0; hi < size(); ++hi)
        if (less(lo, hi)) {
          auto lc = lower_covers(hi);
          if (std::find(lc.begin(), lc.end(), lo) != lc.end()) out.emplace_back(label(lo), label(hi));
        }
    return out;
  }

  Relation relations() const {
    Relation out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (less(i, j)) out.emplace_back(label(i), label(j));
    return out;
  }

  // A finite poset is a forest iff every element has at most one lower cover.
  bool is_forest() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (lower_covers(i).size() > 1) return false;
    return true;
  }

  // Exhaustive search for a copy of the wedge poset; canonical (first m, then
  // s, then t in label order).
  std::optional<Wedge> find_wedge() const {
    const std::size_t n = size();
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t s = 0; s < n; ++s) {
        if (!less(s, m)) continue;
        for (std::size_t t = s + 1; t < n; ++t)
          if (less(t, m) && !comparable(s, t)) return Wedge{label(s), label(t), label(m)};
      }
    return std::nullopt;
  }

  // Root of i in a forest: the least element of the chain {j : j <= i}.
  std::size_t root_of(std::size_t i) const {
    std::size_t r = i;
    for (std::size_t j = 0; j < size(); ++j)
      if (less(j, r)) r = j;
    return r;
  }

  ForestReport classify_forest() const {
    ForestReport report;
    report.is_forest = is_forest();
    if (!report.is_forest) {
      report.witness = find_wedge();
      if (!report.witness) throw VerificationFailure("non-forest without a wedge subposet");
      return report;
    }
    std::map<std::size_t, std::vector<std::string>> by_root;
    for (std::size_t i = 0; i < size(); ++i) by_root[root_of(i)].push_back(label(i));
    for (auto& [root, members] : by_root) report.trees.push_back(Tree{label(root), std::move(members)});
    return report;
  }

  // Subposet induced on the given element indices.
  Poset induced(std::span<const std::size_t> indices) const {
    std::vector<std::size_t> idx(indices.begin(), indices.end());
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    const std::size_t k = idx.size();
    std::vector<std::string> labels;
    for (auto i : idx) labels.push_back(label(i));
    std::vector<std::uint8_t> lt(k * k, 0);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) lt[a * k + b] = less(idx[a], idx[b]) ? 1 : 0;
    return Poset(std::move(labels), std::move(lt));
  }

  Poset induced(const std::vector<std::string>& labels) const {
    std::vector<std::size_t> idx;
    for (const auto& l : labels) idx.push_back(index(l));
    return induced(std::span<const std::size_t>(idx));
  }

  // Topological sort; among available elements the least label goes first.
  std::vector<std::string> linear_extension() const {
    const std::size_t n = size();
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i) pending[i] = lower_covers(i).size();
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
      if (pending[i] == 0) ready.insert(i);
    std::vector<std::string> out;
    while (!ready.empty()) {
      std::size_t i = *ready.begin();
      ready.erase(ready.begin());
      out.push_back(label(i));
      for (std::size_t j = 0; j < n; ++j) {
        if (!less(i, j)) continue;
        auto lc = lower_covers(j);
        if (std::find(lc.begin(), lc.end(), i) != lc.end() && --pending[j] == 0) ready.insert(j);
      }
    }
    return out;
  }

  bool is_product() const { return rep_->product != nullptr; }

  const Poset& left_factor() const;
  const Poset& right_factor() const;

  // (i, j) with this element equal to (left.label(i), right.label(j)).
  std::pair<std::size_t, std::size_t> factor_indices(std::size_t k) const;
  std::size_t product_index(std::size_t i, std::size_t j) const;

  bool same_instance(const Poset& other) const { return rep_ == other.rep_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.rep_ == b.rep_ || (a.rep_->labels == b.rep_->labels && a.rep_->lt == b.rep_->lt);
  }

  friend Poset product(const Poset& p, const Poset& q);
  friend Poset disjoint_union(const Poset& p, const Poset& q);

 private:
  struct ProductInfo;
  struct Rep {
    std::vector<std::string> labels;
    std::vector<std::uint8_t> lt;
    std::shared_ptr<const ProductInfo> product;
  };

  Poset(std::vector<std::string> labels, std::vector<std::uint8_t> lt,
        std::shared_ptr<const ProductInfo> info = nullptr)
      : rep_(std::make_shared<const Rep>(Rep{std::move(labels), std::move(lt), std::move(info)})) {}

  const ProductInfo& product_info() const;

  template <typename Pred>
  std::vector<std::string> select(Pred pred) const {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (pred(j)) out.push_back(label(j));
    return out;
  }

  std::shared_ptr<const Rep> rep_;
};

struct Poset::ProductInfo {
  Poset left, right;
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // by product index
  std::vector<std::size_t> element;                          // by i * |right| + j
};

inline const Poset::ProductInfo& Poset::product_info() const {
  if (!rep_->product) throw NotAProductPoset("poset is not a product poset");
  return *rep_->product;
}

inline const Poset& Poset::left_factor() const { return product_info().left; }
inline const Poset& Poset::right_factor() const { return product_info().right; }

inline std::pair<std::size_t, std::size_t> Poset::factor_indices(std::size_t k) const {
  return product_info().factors.at(k);
}

inline std::size_t Poset::product_index(std::size_t i, std::size_t j) const {
  const auto& info = product_info();
  return info.element.at(i * info.right.size() + j);
}

// S x T with the componentwise order; element (s,t) is labelled "s|t".
inline Poset product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size(), m = q.size();
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      cells.push_back({p.label(i) + kProductSeparator + q.label(j), {i, j}});
  std::sort(cells.begin(), cells.end());

  auto info = std::make_shared<Poset::ProductInfo>();
  info->left = p;
  info->right = q;
  info->element.assign(n * m, 0);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    labels.push_back(cells[k].first);
    info->factors.push_back(cells[k].second);
    info->element[cells[k].second.first * m + cells[k].second.second] = k;
  }
  const std::size_t nm = cells.size();
  std::vector<std::uint8_t> lt(nm * nm, 0);
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = 0; b < nm; ++b) {
      auto [i1, j1] = info->factors[a];
      auto [i2, j2] = info->factors[b];
      lt[a * nm + b] = (a != b && p.less_equal(i1, i2) && q.less_equal(j1, j2)) ? 1 : 0;
    }
  return Poset(std::move(labels), std::move(lt), std::move(info));
}

// Disjoint union; label sets must not overlap.
inline Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  std::sort(labels.begin(), labels.end());
  if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end())
    throw InvalidLabel("label '" + *dup + "' occurs in both posets");
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> lt(n * n, 0);
  auto copy = [&](const Poset& part) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = 0; j < part.size(); ++j)
        if (part.less(i, j)) {
          auto a = std::lower_bound(labels.begin(), labels.end(), part.label(i)) - labels.begin();
          auto b = std::lower_bound(labels.begin(), labels.end(), part.label(j)) - labels.begin();
          lt[a * n + b] = 1;
        }
  };
  copy(p);
  copy(q);
  return Poset(std::move(labels), std::move(lt));
}

}  // namespace lexcone
