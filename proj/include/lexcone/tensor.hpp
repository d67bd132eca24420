#pragma once

#include <utility>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/generators.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"

namespace lexcone {

// sum_i left_i (x) right_i, kept as given (no merging of pairs).
struct TensorTerm {
  LexVector left;
  LexVector right;
};
using TensorRep = std::vector<TensorTerm>;

inline void require_product(const Poset& st) {
  if (!st.is_product()) throw NotAProductPoset("vector does not live on a product poset");
}

// (f (x) g)(s, t) = f(s) g(t) on the given product poset S x T.
inline LexVector elementary_tensor(const Poset& st, const LexVector& f, const LexVector& g) {
  require_product(st);
  if (!(f.poset() == st.left_factor()) || !(g.poset() == st.right_factor()))
    throw PosetMismatch("tensor factors do not match the product poset");
  LexVector out(st);
  for (const auto& [i, a] : f.entries())
    for (const auto& [j, b] : g.entries()) out.set(st.product_index(i, j), a * b);
  return out;
}

inline LexVector elementary_tensor(const LexVector& f, const LexVector& g) {
  return elementary_tensor(product(f.poset(), g.poset()), f, g);
}

inline LexVector flatten(const Poset& st, const TensorRep& rep) {
  LexVector sum(st);
  for (const auto& term : rep) sum += elementary_tensor(st, term.left, term.right);
  return sum;
}

// Membership in the projective cone K_p(Lex(S), Lex(T)), which the product
// isomorphism identifies with Lex(S x T)_+.
inline bool kp_member(const LexVector& u) {
  require_product(u.poset());
  return u.is_positive();
}

// Image of one canonical generator of Lex(S x T)_+ as positive elementary
// tensors, scaled by mu. Diagonal pairs split through (s2, t1):
//   g(s1,t1) - a g(s2,t2) = (g(s1,t1) - g(s2,t1)) + (g(s2,t1) - a g(s2,t2)).
inline void append_tensor_terms(const Poset& st, const Term& term, TensorRep& out) {
  const Poset& S = st.left_factor();
  const Poset& T = st.right_factor();
  auto e = [&](std::size_t i) { return LexVector::basis(S, i); };
  auto f = [&](std::size_t j) { return LexVector::basis(T, j); };
  const Rational& mu = term.mu;

  if (const auto* one = std::get_if<Single>(&term.gen)) {
    auto [s, t] = st.factor_indices(one->s);
    out.push_back({mu * e(s), f(t)});
    return;
  }
  const auto& pair = std::get<Pair>(term.gen);
  auto [s1, t1] = st.factor_indices(pair.s);
  auto [s2, t2] = st.factor_indices(pair.t);
  const Rational& alpha = pair.lambda;
  if (s1 == s2) {
    out.push_back({mu * e(s1), f(t1) - alpha * f(t2)});
  } else if (t1 == t2) {
    out.push_back({mu * (e(s1) - alpha * e(s2)), f(t1)});
  } else {
    out.push_back({mu * (e(s1) - e(s2)), f(t1)});
    out.push_back({mu * e(s2), f(t1) - alpha * f(t2)});
  }
}

// Positive tensor representation of u in K_p, via the canonical generator
// decomposition over S x T.
inline TensorRep kp_decompose(const LexVector& u) {
  require_product(u.poset());
  if (!u.is_positive()) throw NotInCone("vector is not in the projective cone");
  TensorRep out;
  for (const auto& term : decompose(u)) append_tensor_terms(u.poset(), term, out);
  return out;
}

}  // namespace lexcone
