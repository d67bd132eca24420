#pragma once

#include <string>
#include <vector>

#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/random.hpp"

namespace lexcone::sampling {

// "a", "b", ... "z", then "a1", "b1", ...
inline std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string l(1, static_cast<char>('a' + i % 26));
    if (i >= 26) l += std::to_string(i / 26);
    out.push_back(l);
  }
  return out;
}

// Labels assigned in shuffled order so that label order is not a linear
// extension by construction.
inline std::vector<std::string> shuffled_letters(Rng& rng, std::size_t n) {
  auto labels = letters(n);
  rng.shuffle(labels);
  return labels;
}

// Random poset: a random DAG on n nodes, edges i -> j (i < j) with a
// per-poset density, closed transitively.
inline Poset random_poset(Rng& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  const unsigned density = 1 + static_cast<unsigned>(rng.below(4));  // out of 8
  const auto labels = shuffled_letters(rng, n);
  Poset::Relation covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(density, 8)) covers.emplace_back(labels[i], labels[j]);
  return Poset::from_covers(labels, covers);
}

// Random forest: node i hangs below a random earlier node or starts a tree.
inline Poset random_forest(Rng& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  const auto labels = shuffled_letters(rng, n);
  Poset::Relation covers;
  for (std::size_t i = 1; i < n; ++i)
    if (!rng.chance(1, 4)) covers.emplace_back(labels[rng.below(i)], labels[i]);
  return Poset::from_covers(labels, covers);
}

inline Poset random_non_forest(Rng& rng, std::size_t max_n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poset p = random_poset(rng, 3, max_n);
    if (!p.is_forest()) return p;
  }
  // Fallback: plant a wedge under random extra structure.
  auto labels = shuffled_letters(rng, max_n);
  Poset::Relation covers{{labels[0], labels[2]}, {labels[1], labels[2]}};
  for (std::size_t i = 3; i < labels.size(); ++i)
    if (rng.chance(1, 2)) covers.emplace_back(labels[rng.below(i)], labels[i]);
  return Poset::from_covers(labels, covers);
}

// Random vector with small rational entries on a random subset of elements.
inline LexVector random_vector(Rng& rng, const Poset& p, unsigned fill_num = 2, unsigned fill_den = 3) {
  LexVector v(p);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (rng.chance(fill_num, fill_den)) v.set(i, rng.small_rational(4, 3));
  return v;
}

// Every poset on n labelled points whose relation is contained in the
// natural order of the labels. Every n-element poset is isomorphic to one
// of these (number it along a linear extension).
inline std::vector<Poset> enumerate_posets(std::size_t n) {
  const auto labels = letters(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    auto has = [&](std::size_t i, std::size_t j) {
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k] == std::pair{i, j}) return ((mask >> k) & 1) != 0;
      return false;
    };
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = i + 1; j < n && closed; ++j)
        for (std::size_t k = j + 1; k < n && closed; ++k)
          if (has(i, j) && has(j, k) && !has(i, k)) closed = false;
    if (!closed) continue;
    Poset::Relation rel;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) rel.emplace_back(labels[pairs[k].first], labels[pairs[k].second]);
    out.push_back(Poset::from_covers(labels, rel));
  }
  return out;
}

// Every forest on n points given by a parent array (parent of i precedes i);
// covers all isomorphism types.
inline std::vector<Poset> enumerate_forests(std::size_t n) {
  const auto labels = letters(n);
  std::vector<std::size_t> parent(n, 0);  // 0 = none, k = node k-1
  std::vector<Poset> out;
  for (;;) {
    Poset::Relation covers;
    for (std::size_t i = 1; i < n; ++i)
      if (parent[i] != 0) covers.emplace_back(labels[parent[i] - 1], labels[i]);
    out.push_back(Poset::from_covers(labels, covers));
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (++parent[i] <= i) break;
      parent[i] = 0;
      if (i == 1) return out;
    }
    if (n <= 1) return out;
  }
}

}  // namespace lexcone::sampling
