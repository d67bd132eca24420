#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/random.hpp"

namespace lexcone {

// e_s
struct Single {
  std::size_t s = 0;
  friend bool operator==(const Single&, const Single&) = default;
};

// e_s - lambda e_t with s < t, lambda > 0
struct Pair {
  std::size_t s = 0, t = 0;
  Rational lambda;
  friend bool operator==(const Pair&, const Pair&) = default;
};

using Generator = std::variant<Single, Pair>;

struct Term {
  Rational mu;  // > 0
  Generator gen;
  friend bool operator==(const Term&, const Term&) = default;
};

using Decomposition = std::vector<Term>;

inline bool is_valid(const Poset& p, const Generator& gen) {
  if (const auto* one = std::get_if<Single>(&gen)) return one->s < p.size();
  const auto& pair = std::get<Pair>(gen);
  return pair.s < p.size() && pair.t < p.size() && p.less(pair.s, pair.t) && sign(pair.lambda) > 0;
}

inline LexVector to_vector(const Poset& p, const Generator& gen) {
  if (const auto* one = std::get_if<Single>(&gen)) return LexVector::basis(p, one->s);
  const auto& pair = std::get<Pair>(gen);
  LexVector v(p);
  v.set(pair.s, Rational(1));
  v.set(pair.t, -pair.lambda);
  return v;
}

// Sum of mu * generator; mu * Pair(s, t, lambda) = mu e_s - mu lambda e_t.
inline LexVector recombine(const Poset& p, const Decomposition& terms) {
  LexVector sum(p);
  for (const auto& term : terms) {
    if (const auto* one = std::get_if<Single>(&term.gen)) {
      sum.add_to(one->s, term.mu);
    } else {
      const auto& pair = std::get<Pair>(term.gen);
      sum.add_to(pair.s, term.mu);
      sum.add_to(pair.t, -term.mu * pair.lambda);
    }
  }
  return sum;
}

// Called at each recursion level with (f restricted to [s>, the rest).
using SplitObserver = std::function<void(const LexVector& head, const LexVector& rest)>;

// Writes a cone element as a positive combination of the canonical
// generators {e_s} and {e_s - lambda e_t : s < t, lambda > 0}.
//
// Each round picks the least-labelled minimal element s of the support (f is
// positive there), splits f into its restriction to [s> = {t >= s} and the
// remainder, expands the head directly and continues with the remainder,
// which is again a cone element with smaller support.
inline Decomposition decompose(const LexVector& f, const SplitObserver& observe = {}) {
  if (!f.is_positive()) throw NotPositive("vector is not in the cone");
  const Poset& p = f.poset();
  Decomposition out;
  LexVector rest = f;
  while (!rest.is_zero()) {
    std::optional<std::size_t> pivot;
    for (auto i : rest.support()) {
      bool minimal = true;
      for (auto j : rest.support())
        if (p.less(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) {
        pivot = i;
        break;
      }
    }
    const std::size_t s = *pivot;
    const Rational fs = rest.at(s);
    if (sign(fs) <= 0) throw VerificationFailure("minimal support element with nonpositive value");

    LexVector head = rest.restricted([&](std::size_t i) { return p.less_equal(s, i); });
    LexVector tail = rest.restricted([&](std::size_t i) { return !p.less_equal(s, i); });
    if (observe) observe(head, tail);

    std::vector<std::size_t> negative;
    for (const auto& [t, q] : head.entries()) {
      if (t == s) continue;
      if (sign(q) > 0)
        out.push_back(Term{q, Single{t}});
      else
        negative.push_back(t);
    }
    if (negative.empty()) {
      out.push_back(Term{fs, Single{s}});
    } else {
      const Rational count(static_cast<long>(negative.size()));
      const Rational share = fs / count;
      for (auto t : negative) out.push_back(Term{share, Pair{s, t, abs_value(head.at(t)) / share}});
    }
    rest = std::move(tail);
  }
  return out;
}

// Random nonnegative combination of `size` random generators; always a cone
// element. Pairs are only drawn when the poset has a strict relation.
inline LexVector random_positive(const Poset& p, Rng& rng, std::size_t size) {
  LexVector v(p);
  if (p.empty()) return v;
  const auto relations = p.relations();
  for (std::size_t k = 0; k < size; ++k) {
    const Rational mu = rng.chance(1, 8) ? Rational(0) : rng.positive_rational(5, 3);
    if (!relations.empty() && rng.chance(1, 2)) {
      const auto& [a, b] = relations[rng.below(relations.size())];
      Pair pair{p.index(a), p.index(b), rng.positive_rational(6, 3)};
      v += mu * to_vector(p, pair);
    } else {
      v.add_to(rng.below(p.size()), mu);
    }
  }
  return v;
}

inline LexVector random_positive(const Poset& p, std::uint64_t seed, std::size_t size) {
  Rng rng(seed);
  return random_positive(p, rng, size);
}

}  // namespace lexcone
