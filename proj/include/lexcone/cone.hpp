#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexcone/error.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/linalg.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/random.hpp"
#include "lexcone/tensor.hpp"

namespace lexcone {

// Finitely generated wedge {sum l_i g_i : l_i >= 0} in Q^d.
class FinCone {
 public:
  FinCone() = default;
  FinCone(std::size_t dim, std::vector<Vec> generators) : dim_(dim), generators_(std::move(generators)) {
    if (dim_ == 0) throw DimensionMismatch("cone dimension must be positive");
    for (const auto& g : generators_) {
      if (g.size() != dim_) throw DimensionMismatch("generator length differs from cone dimension");
      if (linalg::is_zero(g)) throw InvalidGenerator("zero generator");
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }

  bool has_duplicates() const {
    auto sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  }

  // d x n matrix whose columns are the generators.
  Matrix generator_matrix() const {
    Matrix g(dim_, Vec(generators_.size()));
    for (std::size_t j = 0; j < generators_.size(); ++j)
      for (std::size_t i = 0; i < dim_; ++i) g[i][j] = generators_[j][i];
    return g;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> generators_;
};

// Nonnegative coefficients expressing v in the cone, if any.
inline std::optional<Vec> cone_certificate(const FinCone& c, const Vec& v) {
  if (v.size() != c.dim()) throw DimensionMismatch("vector length differs from cone dimension");
  if (c.generators().empty()) {
    if (linalg::is_zero(v)) return Vec{};
    return std::nullopt;
  }
  return find_nonnegative_solution(c.generator_matrix(), v);
}

inline bool cone_member(const FinCone& c, const Vec& v) { return cone_certificate(c, v).has_value(); }

// Pointed iff no nonzero l >= 0 with G l = 0; normalised by sum l = 1.
inline bool is_pointed(const FinCone& c) {
  if (c.generators().empty()) return true;
  Matrix a = c.generator_matrix();
  a.push_back(Vec(c.generators().size(), Rational(1)));
  Vec b(c.dim() + 1, Rational(0));
  b.back() = 1;
  return !find_nonnegative_solution(a, b).has_value();
}

// Nonzero x with <g, x> >= 0 for every generator: the normal of a closed
// half-space containing the wedge. Tries the normalisations x_k = +1, x_k = -1
// for k = 0, 1, ... in turn and returns the first feasible vertex.
inline Vec dual_vector(const FinCone& c) {
  const std::size_t d = c.dim(), n = c.generators().size();
  // Variables: x+ (d), x- (d), slacks (n).
  for (std::size_t k = 0; k < d; ++k)
    for (int sigma : {1, -1}) {
      Matrix a(n + 1, Vec(2 * d + n, Rational(0)));
      Vec b(n + 1, Rational(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          a[i][j] = c.generators()[i][j];
          a[i][d + j] = -c.generators()[i][j];
        }
        a[i][2 * d + i] = -1;
      }
      a[n][k] = 1;
      a[n][d + k] = -1;
      b[n] = sigma;
      if (auto sol = find_nonnegative_solution(a, b)) {
        Vec x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = (*sol)[j] - (*sol)[d + j];
        for (const auto& g : c.generators())
          if (sgn(linalg::dot(g, x)) < 0) throw VerificationFailure("dual vector has a negative pairing");
        return x;
      }
    }
  throw NoHalfSpace("the wedge is the whole space");
}

// Invertible A with A g lexicographically positive for every generator g:
// an isomorphism carrying the cone into R^d_lex.
struct LexEmbedding {
  Matrix a;
};

namespace detail {

// Row 1 is a half-space normal x; generators on ker(x) are rewritten in a
// basis of ker(x) and embedded one dimension lower.
inline Matrix lex_embed_rows(std::size_t d, const std::vector<Vec>& gens) {
  if (gens.empty()) return linalg::identity(d);
  const Vec x = dual_vector(FinCone(d, gens));
  if (d == 1) return Matrix{x};

  const auto kernel = linalg::hyperplane_basis(x);
  // Columns of q: the kernel basis, then x. Since <x, x> > 0, q is
  // invertible and its inverse's first d - 1 rows give kernel coordinates.
  Matrix q(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j + 1 < d; ++j) q[i][j] = kernel[j][i];
    q[i][d - 1] = x[i];
  }
  Matrix coords = *linalg::inverse(q);
  coords.pop_back();

  std::vector<Vec> flat;
  for (const auto& g : gens)
    if (sgn(linalg::dot(g, x)) == 0) flat.push_back(linalg::multiply(coords, g));

  const Matrix lower = linalg::multiply(lex_embed_rows(d - 1, flat), coords);
  Matrix a{x};
  a.insert(a.end(), lower.begin(), lower.end());
  return a;
}

}  // namespace detail

inline bool verify_embedding(const FinCone& c, const Matrix& a) {
  if (a.size() != c.dim()) return false;
  for (const auto& row : a)
    if (row.size() != c.dim()) return false;
  if (sgn(linalg::determinant(a)) == 0) return false;
  for (const auto& g : c.generators())
    if (!linalg::lex_positive(linalg::multiply(a, g))) return false;
  return true;
}

inline LexEmbedding lex_embed(const FinCone& c) {
  if (!is_pointed(c)) throw NotPointed("cone is not pointed");
  LexEmbedding e{detail::lex_embed_rows(c.dim(), c.generators())};
  if (!verify_embedding(c, e.a)) throw VerificationFailure("lex embedding failed its own check");
  return e;
}

// Rank-one generators g h^T of K_p(X, Y), flattened row-major.
inline FinCone kp_cone(const FinCone& x, const FinCone& y) {
  std::vector<Vec> gens;
  for (const auto& g : x.generators())
    for (const auto& h : y.generators()) {
      Vec gh;
      for (const auto& a : g)
        for (const auto& b : h) gh.push_back(a * b);
      gens.push_back(std::move(gh));
    }
  return FinCone(x.dim() * y.dim(), std::move(gens));
}

inline Vec flatten_matrix(const Matrix& u) {
  Vec v;
  for (const auto& row : u) v.insert(v.end(), row.begin(), row.end());
  return v;
}

inline bool kp_member_general(const FinCone& x, const FinCone& y, const Matrix& u) {
  if (u.size() != x.dim()) throw DimensionMismatch("matrix row count differs from dim X");
  for (const auto& row : u)
    if (row.size() != y.dim()) throw DimensionMismatch("matrix column count differs from dim Y");
  return cone_member(kp_cone(x, y), flatten_matrix(u));
}

struct KpCheckReport {
  std::size_t trials = 0;
  std::size_t members = 0;          // sampled u with u in K_p
  std::size_t double_members = 0;   // sampled nonzero u with u and -u in K_p
  bool lp_route_ok = true;
  std::size_t generators_checked = 0;
  bool embedding_route_ok = true;
  Matrix embed_x, embed_y;
};

// Chain {label0 < label1 < ...}, for R^d_lex viewed as Lex of a chain.
inline Poset index_chain(const std::string& prefix, std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    std::string num = std::to_string(i);
    labels.push_back(prefix + std::string(4 - std::min<std::size_t>(4, num.size()), '0') + num);
  }
  return Poset::chain(labels);
}

inline LexVector chain_vector(const Poset& chain, const Vec& v) {
  LexVector out(chain);
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i]);
  return out;
}

// Two independent certifications that K_p(X, Y) is pointed:
//  - LP route: random u in span(G (x) H); whenever u and -u are both
//    members, u must be zero.
//  - embedding route: with A_X, A_Y lex embeddings, every (A_X g) (x) (A_Y h)
//    is positive in Lex(chain x chain), a cone, and A_X (x) A_Y is invertible.
inline KpCheckReport kp_pointedness_check(const FinCone& x, const FinCone& y, std::size_t trials,
                                          std::uint64_t seed) {
  if (!is_pointed(x) || !is_pointed(y)) throw NotPointed("input cones must be pointed");
  KpCheckReport report;
  report.trials = trials;

  const FinCone kp = kp_cone(x, y);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, 0x6b70, trial);
    const long lo = rng.chance(1, 2) ? -2 : 0;
    Vec u(kp.dim(), Rational(0));
    for (const auto& g : kp.generators()) {
      const Rational coef(rng.range(lo, 2));
      if (sgn(coef) != 0)
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += coef * g[i];
    }
    if (!cone_member(kp, u)) continue;
    ++report.members;
    Vec neg = u;
    for (auto& q : neg) q = -q;
    if (!linalg::is_zero(u) && cone_member(kp, neg)) {
      ++report.double_members;
      report.lp_route_ok = false;
    }
  }

  report.embed_x = lex_embed(x).a;
  report.embed_y = lex_embed(y).a;
  const Poset cx = index_chain("x", x.dim());
  const Poset cy = index_chain("y", y.dim());
  const Poset grid = product(cx, cy);
  for (const auto& g : x.generators())
    for (const auto& h : y.generators()) {
      const LexVector image = elementary_tensor(grid, chain_vector(cx, linalg::multiply(report.embed_x, g)),
                                                chain_vector(cy, linalg::multiply(report.embed_y, h)));
      ++report.generators_checked;
      if (!image.is_positive()) report.embedding_route_ok = false;
    }
  if (sgn(linalg::determinant(report.embed_x)) == 0 || sgn(linalg::determinant(report.embed_y)) == 0)
    report.embedding_route_ok = false;
  return report;
}

// Random pointed cone with 1..max_gens small rational generators in Q^d,
// 1 <= d <= max_dim. Half the draws orient generators against a random
// direction first; the rest are rejection-sampled as drawn.
inline FinCone random_pointed_cone(Rng& rng, std::size_t max_dim, std::size_t max_gens) {
  for (;;) {
    const std::size_t d = 1 + rng.below(max_dim);
    const std::size_t n = 1 + rng.below(max_gens);
    const bool orient = rng.chance(1, 2);
    Vec w(d);
    for (auto& q : w) q = Rational(rng.range(-2, 2));
    std::vector<Vec> gens;
    while (gens.size() < n) {
      Vec g(d);
      for (auto& q : g) q = rng.chance(1, 3) ? Rational(0) : rng.small_rational(3, 2);
      if (linalg::is_zero(g)) continue;
      if (orient && sgn(linalg::dot(g, w)) < 0)
        for (auto& q : g) q = -q;
      gens.push_back(std::move(g));
    }
    FinCone c(d, std::move(gens));
    if (is_pointed(c)) return c;
  }
}

}  // namespace lexcone
