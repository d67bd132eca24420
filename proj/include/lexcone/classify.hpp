#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/lattice.hpp"
#include "lexcone/poset.hpp"

namespace lexcone {

struct LexUnionRoot;

// Finite-dimensional vector lattice as a direct sum of lexicographic unions
// R o M, each M again of this form. An empty sum is the zero space.
struct LexUnionTerm {
  std::vector<LexUnionRoot> roots;
};

// R o M with M given by `child`.
struct LexUnionRoot {
  LexUnionTerm child;
};

inline bool operator==(const LexUnionTerm& a, const LexUnionTerm& b);
inline bool operator==(const LexUnionRoot& a, const LexUnionRoot& b) { return a.child == b.child; }
inline bool operator==(const LexUnionTerm& a, const LexUnionTerm& b) { return a.roots == b.roots; }

inline std::size_t dimension(const LexUnionTerm& t) {
  std::size_t d = 0;
  for (const auto& r : t.roots) d += 1 + dimension(r.child);
  return d;
}

// Parenthesis encoding with sorted summands: equal encodings iff the terms
// agree up to reordering of sums.
inline std::string encode(const LexUnionTerm& t) {
  std::vector<std::string> parts;
  for (const auto& r : t.roots) parts.push_back("(" + encode(r.child) + ")");
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

inline LexUnionTerm canonicalised(LexUnionTerm t) {
  for (auto& r : t.roots) r.child = canonicalised(std::move(r.child));
  std::stable_sort(t.roots.begin(), t.roots.end(), [](const LexUnionRoot& a, const LexUnionRoot& b) {
    return encode(a.child) < encode(b.child);
  });
  return t;
}

// One R o M_k per tree root s_k, with M_k = Lex of the strict up-set of s_k.
inline LexUnionTerm forest_to_term(const Poset& f) {
  require_forest(f);
  LexUnionTerm t;
  for (auto root : f.minimal_indices()) {
    const auto upper = f.above(root);
    t.roots.push_back(LexUnionRoot{forest_to_term(f.induced(std::span<const std::size_t>(upper)))});
  }
  return canonicalised(std::move(t));
}

namespace detail {

inline void build_forest(const LexUnionTerm& t, const std::string* parent, std::size_t width,
                         std::size_t& next, std::vector<std::string>& labels, Poset::Relation& covers) {
  for (const auto& r : t.roots) {
    std::string num = std::to_string(next++);
    std::string label = "v" + std::string(width - std::min(width, num.size()), '0') + num;
    labels.push_back(label);
    if (parent) covers.emplace_back(*parent, label);
    build_forest(r.child, &label, width, next, labels, covers);
  }
}

}  // namespace detail

// Each root adjoined below its child forest; labels v0, v1, ... in preorder.
inline Poset term_to_forest(const LexUnionTerm& t) {
  const std::size_t width = std::to_string(dimension(t)).size();
  std::vector<std::string> labels;
  Poset::Relation covers;
  std::size_t next = 0;
  detail::build_forest(t, nullptr, width, next, labels, covers);
  return Poset::from_covers(labels, covers);
}

// Label-free isomorphism invariant of a forest, computed from the Hasse
// diagram: each node encodes as "(" + sorted encodings of its upper covers
// + ")", the forest as its sorted root encodings.
inline std::string canonical_form(const Poset& f) {
  require_forest(f);
  const std::size_t n = f.size();
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    auto lc = f.lower_covers(i);
    if (lc.empty())
      roots.push_back(i);
    else
      children[lc.front()].push_back(i);
  }
  auto node = [&](auto&& self, std::size_t i) -> std::string {
    std::vector<std::string> parts;
    for (auto c : children[i]) parts.push_back(self(self, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
  };
  std::vector<std::string> parts;
  for (auto r : roots) parts.push_back(node(node, r));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace lexcone
