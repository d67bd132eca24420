#pragma once

#include <map>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"

namespace lexcone {

// Lex(S) is a vector lattice iff S is a forest.
inline bool is_lattice(const Poset& p) { return p.classify_forest().is_forest; }

inline void require_forest(const Poset& p) {
  if (!p.is_forest()) throw NotAForest("poset is not a forest; Lex(S) is not a lattice");
}

// f v 0 on a forest. Works on supp(f) as an induced subposet: there f splits
// into trees, and each tree is either entirely positive or entirely negative
// according to the sign at its root.
inline LexVector sup_with_zero(const LexVector& f) {
  require_forest(f.poset());
  const auto supp = f.support();
  const Poset sub = f.poset().induced(std::span<const std::size_t>(supp));
  // Induced posets keep label order, so sub index k is supp[k].
  std::map<std::size_t, std::vector<std::size_t>> trees;
  for (std::size_t k = 0; k < sub.size(); ++k) trees[sub.root_of(k)].push_back(supp[k]);

  LexVector out(f.poset());
  for (const auto& [root, members] : trees) {
    if (sign(f.at(supp[root])) < 0) continue;
    for (auto i : members) out.set(i, f.at(i));
  }
  return out;
}

// f v g = ((f - g) v 0) + g
inline LexVector sup(const LexVector& f, const LexVector& g) { return sup_with_zero(f - g) + g; }

// f ^ g = -((-f) v (-g))
inline LexVector inf(const LexVector& f, const LexVector& g) { return -sup(-f, -g); }

// |f| = f v (-f)
inline LexVector abs(const LexVector& f) { return sup(f, -f); }

// A finite prefix of an infinite strictly descending chain of upper bounds of
// {f, 0}; certifies that f v 0 does not exist.
struct DescentChain {
  LexVector f;
  std::vector<LexVector> upper_bounds;
};

// Counterexample to the lattice property on a non-forest: with (s, t, m) a
// wedge in S, f = e_s - e_t - e_m and 0 have no least upper bound. descend()
// turns any upper bound into a strictly smaller one and checks its own output.
class NoSupWitness {
 public:
  explicit NoSupWitness(const Poset& p) : poset_(p) {
    auto report = p.classify_forest();
    if (report.is_forest) throw IsAForest("poset is a forest; suprema exist");
    wedge_ = *report.witness;
    s_ = p.index(wedge_.s);
    t_ = p.index(wedge_.t);
    m_ = p.index(wedge_.m);
    f_ = LexVector::basis(p, s_) - LexVector::basis(p, t_) - LexVector::basis(p, m_);
  }

  const Poset& poset() const { return poset_; }
  const Wedge& wedge() const { return wedge_; }
  const LexVector& f() const { return f_; }

  bool is_upper_bound(const LexVector& h) const {
    return leq(f_, h) && leq(LexVector(poset_), h);
  }

  // e_s dominates both: e_s - f = e_t + e_m.
  LexVector initial_upper_bound() const { return LexVector::basis(poset_, s_); }

  LexVector descend(const LexVector& h) const {
    if (!(h.poset() == poset_)) throw PosetMismatch("upper bound lives on a different poset");
    if (!is_upper_bound(h)) throw NotAnUpperBound("input is not an upper bound of {f, 0}");

    LexVector next = h;
    std::optional<std::size_t> outside;
    for (auto u : h.support())
      if (u != s_ && u != t_ && u != m_) {
        outside = u;
        break;
      }
    if (outside) {
      const Rational hu = h.at(*outside);
      next.add_to(*outside, sign(hu) > 0 ? Rational(-hu / 2) : Rational(-1));
    } else {
      next.add_to(m_, Rational(-1));
    }

    if (!is_upper_bound(next) || !strictly_less(next, h))
      throw VerificationFailure("descent step did not produce a smaller upper bound");
    return next;
  }

  DescentChain chain(std::size_t steps) const { return chain_from(initial_upper_bound(), steps); }

  DescentChain chain_from(const LexVector& start, std::size_t steps) const {
    DescentChain out{f_, {start}};
    for (std::size_t k = 0; k < steps; ++k) out.upper_bounds.push_back(descend(out.upper_bounds.back()));
    return out;
  }

 private:
  Poset poset_;
  Wedge wedge_;
  std::size_t s_ = 0, t_ = 0, m_ = 0;
  LexVector f_;
};

inline NoSupWitness no_sup_witness(const Poset& p) { return NoSupWitness(p); }

}  // namespace lexcone
