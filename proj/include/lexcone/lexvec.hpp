#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/rational.hpp"

namespace lexcone {

// Finitely supported rational function on the elements of a poset, i.e. an
// element of Lex(S). Only nonzero coefficients are stored, keyed by element
// index. Since posets are finite the same type also represents functionals.
class LexVector {
 public:
  using Entries = std::map<std::size_t, Rational>;

  LexVector() = default;
  explicit LexVector(Poset poset) : poset_(std::move(poset)) {}

  LexVector(Poset poset, std::initializer_list<std::pair<std::string_view, Rational>> entries)
      : poset_(std::move(poset)) {
    for (const auto& [l, q] : entries) add_to(poset_.index(l), q);
  }

  static LexVector basis(const Poset& p, std::string_view label) { return basis(p, p.index(label)); }
  static LexVector basis(const Poset& p, std::size_t i) {
    LexVector v(p);
    v.set(i, Rational(1));
    return v;
  }

  const Poset& poset() const { return poset_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (const auto& [i, q] : entries_) out.push_back(i);
    return out;
  }

  Rational at(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Rational(0) : it->second;
  }
  Rational operator[](std::string_view label) const { return at(poset_.index(label)); }

  void set(std::size_t i, const Rational& q) {
    if (i >= poset_.size()) throw UnknownLabel("element index out of range");
    if (sign(q) == 0)
      entries_.erase(i);
    else
      entries_[i] = q;
  }
  void set(std::string_view label, const Rational& q) { set(poset_.index(label), q); }

  void add_to(std::size_t i, const Rational& q) { set(i, at(i) + q); }

  // f(s) < 0 implies some t < s has f(t) > 0.
  bool is_positive() const {
    for (const auto& [s, q] : entries_) {
      if (sign(q) >= 0) continue;
      bool witnessed = false;
      for (const auto& [t, r] : entries_)
        if (sign(r) > 0 && poset_.less(t, s)) {
          witnessed = true;
          break;
        }
      if (!witnessed) return false;
    }
    return true;
  }

  // Coefficients kept where keep(index) holds.
  LexVector restricted(const std::function<bool(std::size_t)>& keep) const {
    LexVector out(poset_);
    for (const auto& [i, q] : entries_)
      if (keep(i)) out.entries_.emplace(i, q);
    return out;
  }

  LexVector& operator+=(const LexVector& g) {
    require_same_poset(g);
    for (const auto& [i, q] : g.entries_) add_to(i, q);
    return *this;
  }
  LexVector& operator-=(const LexVector& g) {
    require_same_poset(g);
    for (const auto& [i, q] : g.entries_) add_to(i, -q);
    return *this;
  }
  LexVector& operator*=(const Rational& lambda) {
    if (sign(lambda) == 0) {
      entries_.clear();
    } else {
      for (auto& [i, q] : entries_) q *= lambda;
    }
    return *this;
  }

  friend LexVector operator+(LexVector f, const LexVector& g) { return f += g; }
  friend LexVector operator-(LexVector f, const LexVector& g) { return f -= g; }
  friend LexVector operator-(LexVector f) { return f *= Rational(-1); }
  friend LexVector operator*(const Rational& lambda, LexVector f) { return f *= lambda; }

  friend bool operator==(const LexVector& f, const LexVector& g) {
    return f.entries_ == g.entries_ && f.poset_ == g.poset_;
  }

  void require_same_poset(const LexVector& g) const {
    if (!(poset_ == g.poset_)) throw PosetMismatch("vectors live on different posets");
  }

 private:
  Poset poset_;
  Entries entries_;
};

inline LexVector scale(const Rational& lambda, const LexVector& f) { return lambda * f; }

// f <= g iff g - f is in the cone.
inline bool leq(const LexVector& f, const LexVector& g) { return (g - f).is_positive(); }

// f < g: f <= g and f != g.
inline bool strictly_less(const LexVector& f, const LexVector& g) { return !(f == g) && leq(f, g); }

inline Rational pairing(const LexVector& f, const LexVector& g) {
  f.require_same_poset(g);
  Rational sum(0);
  for (const auto& [i, q] : f.entries()) sum += q * g.at(i);
  return sum;
}

// Extreme rays of the dual cone: e_s for each minimal s.
inline std::vector<LexVector> dual_generators(const Poset& p) {
  std::vector<LexVector> out;
  for (auto s : p.minimal_indices()) out.push_back(LexVector::basis(p, s));
  return out;
}

// True iff g is in the dual cone: g >= 0 pointwise and supported on minimal
// elements.
inline bool in_dual_cone(const LexVector& g) {
  for (const auto& [i, q] : g.entries())
    if (sign(q) < 0 || !g.poset().is_minimal(i)) return false;
  return true;
}

struct DualViolation {
  LexVector f;       // e_t - n e_s, a cone element
  std::string t;     // least label below s
  long n = 0;        // least n >= 1 with <f, g> < 0
  Rational pairing;  // <f, g>
};

// Certifies that a functional putting mass on a nonminimal element s is not
// in the dual cone: returns f = e_t - n e_s in the cone with <f, g> < 0.
inline DualViolation dual_violation_witness(const Poset& p, std::string_view s, const LexVector& g) {
  const std::size_t si = p.index(s);
  if (!(g.poset() == p)) throw PosetMismatch("functional lives on a different poset");
  auto lower = p.below(si);
  if (lower.empty()) throw NotApplicable("'" + std::string(s) + "' is minimal");
  for (const auto& [i, q] : g.entries())
    if (sign(q) < 0) throw NotApplicable("functional is not pointwise nonnegative");
  const Rational gs = g.at(si);
  if (sign(gs) <= 0) throw NotApplicable("functional vanishes at '" + std::string(s) + "'");

  const std::size_t ti = lower.front();
  const Rational gt = g.at(ti);
  // <e_t - n e_s, g> = g(t) - n g(s) < 0  iff  n > g(t)/g(s)
  mpz_class floor_ratio;
  Rational ratio = gt / gs;
  mpz_fdiv_q(floor_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  mpz_class n = floor_ratio + 1;
  if (n < 1) n = 1;
  if (!n.fits_slong_p()) throw NotApplicable("witness multiplier out of range");

  DualViolation out;
  out.t = p.label(ti);
  out.n = n.get_si();
  out.f = LexVector::basis(p, ti) - Rational(n) * LexVector::basis(p, si);
  out.pairing = pairing(out.f, g);
  if (!out.f.is_positive() || sign(out.pairing) >= 0)
    throw VerificationFailure("dual violation witness failed its own check");
  return out;
}

}  // namespace lexcone
