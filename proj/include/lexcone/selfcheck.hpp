#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "lexcone/classify.hpp"
#include "lexcone/cone.hpp"
#include "lexcone/generators.hpp"
#include "lexcone/lattice.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/linalg.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/random.hpp"
#include "lexcone/sampling.hpp"
#include "lexcone/tensor.hpp"

// Seeded property suites, one per acceptance criterion. Each randomised
// suite draws its instances from an independent stream derived from
// (seed, criterion, instance index), so results do not depend on the order
// in which suites run.
namespace lexcone::selfcheck {

struct RunConfig {
  std::uint64_t seed = 42;
  // Cap on randomised instances per suite; suites run
  // min(trials, their nominal count). Exhaustive suites ignore it.
  std::size_t trials = 1000;
  std::size_t max_poset_size = 8;
  std::size_t max_dim = 4;
  std::string suite = "all";
  bool parallel = true;
};

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && checks > 0; }
};

struct Report {
  RunConfig config;
  std::vector<SuiteResult> suites;
  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
  }
};

namespace detail {

class Recorder {
 public:
  Recorder(int criterion, std::string name) {
    result_.criterion = criterion;
    result_.name = std::move(name);
  }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) fail(what);
  }

  void fail(const std::string& what) {
    if (result_.failures++ == 0) result_.first_failure = what;
  }

  // Runs one instance; library errors count as failures.
  void instance(std::size_t index, const std::function<void()>& body) {
    ++result_.instances;
    try {
      body();
    } catch (const std::exception& e) {
      ++result_.checks;
      fail("instance " + std::to_string(index) + ": " + e.what());
    }
  }

  SuiteResult result() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline std::size_t budget(const RunConfig& cfg, std::size_t nominal) { return std::min(cfg.trials, nominal); }

inline std::string at(std::size_t i) { return " (instance " + std::to_string(i) + ")"; }

// Cone element by one of two independent routes: a generator combination, or
// rejection sampling of arbitrary vectors against the membership predicate.
inline LexVector mixed_positive(Rng& rng, const Poset& p, bool rejection) {
  if (rejection) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      LexVector v = sampling::random_vector(rng, p);
      if (v.is_positive()) return v;
    }
  }
  return random_positive(p, rng, 1 + rng.below(6));
}

inline SuiteResult cone_axioms(const RunConfig& cfg) {
  Recorder rec(1, "cone-axioms");
  for (std::size_t i = 0; i < budget(cfg, 1000); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 1, i);
      const Poset p = sampling::random_poset(rng, 1, cfg.max_poset_size);
      const LexVector f = mixed_positive(rng, p, rng.chance(1, 2));
      const LexVector g = mixed_positive(rng, p, rng.chance(1, 2));
      rec.check(f.is_positive() && g.is_positive(), "sampled element not positive" + at(i));
      rec.check((f + g).is_positive(), "f + g not positive" + at(i));
      for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(3)})
        rec.check((lambda * f).is_positive(), "lambda f not positive" + at(i));
      // Pointedness: +-h both positive only for h = 0.
      std::vector<LexVector> candidates{f, g, f - g, LexVector(p)};
      for (int k = 0; k < 8; ++k) candidates.push_back(sampling::random_vector(rng, p));
      for (const auto& h : candidates)
        rec.check(!(h.is_positive() && (-h).is_positive()) || h.is_zero(), "+-h positive, h != 0" + at(i));
    });
  return std::move(rec).result();
}

inline SuiteResult specialisations(const RunConfig&) {
  Recorder rec(2, "chain-antichain-specialisations");
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto labels = sampling::letters(d);
    const Poset chain = Poset::chain(labels);
    const Poset anti = Poset::antichain(labels);
    std::size_t patterns = 1;
    for (std::size_t k = 0; k < d; ++k) patterns *= 3;
    for (std::size_t code = 0; code < patterns; ++code)
      rec.instance(code, [&] {
        std::vector<int> signs;
        for (std::size_t k = 0, c = code; k < d; ++k, c /= 3) signs.push_back(static_cast<int>(c % 3) - 1);
        LexVector on_chain(chain), on_anti(anti);
        for (std::size_t k = 0; k < d; ++k) {
          const Rational value(signs[k] * static_cast<long>(k + 1), 2);
          on_chain.set(k, value);
          on_anti.set(k, value);
        }
        int first = 0;
        for (int s : signs)
          if (s != 0) {
            first = s;
            break;
          }
        const bool lex = first >= 0;
        const bool entrywise = std::all_of(signs.begin(), signs.end(), [](int s) { return s >= 0; });
        rec.check(on_chain.is_positive() == lex, "chain disagrees with lexicographic sign, d=" + std::to_string(d));
        rec.check(on_anti.is_positive() == entrywise, "antichain disagrees with entrywise sign, d=" + std::to_string(d));
      });
  }
  return std::move(rec).result();
}

inline SuiteResult dual_cone(const RunConfig& cfg) {
  Recorder rec(3, "dual-cone");
  for (std::size_t i = 0; i < budget(cfg, 500); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 3, i);
      const Poset p = sampling::random_poset(rng, 1, cfg.max_poset_size);
      const LexVector f = mixed_positive(rng, p, rng.chance(1, 2));
      LexVector combo(p);
      for (const auto& g : dual_generators(p)) {
        rec.check(pairing(f, g) >= 0, "negative pairing with a dual generator" + at(i));
        combo += rng.positive_rational(4, 3) * g;
      }
      rec.check(pairing(f, combo) >= 0, "negative pairing with a dual combination" + at(i));
    });
  for (std::size_t i = 0; i < budget(cfg, 100); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 0x300 + 3, i);
      const Poset p = sampling::random_poset(rng, 2, cfg.max_poset_size);
      for (std::size_t s = 0; s < p.size(); ++s) {
        if (p.is_minimal(s)) continue;
        LexVector g(p);
        for (std::size_t k = 0; k < p.size(); ++k)
          if (rng.chance(1, 2)) g.set(k, rng.positive_rational(5, 3));
        g.set(s, rng.positive_rational(5, 3));
        const auto w = dual_violation_witness(p, p.label(s), g);
        rec.check(w.f.is_positive(), "witness not in the cone" + at(i));
        rec.check(pairing(w.f, g) < 0, "witness pairing not negative" + at(i));
      }
    });
  return std::move(rec).result();
}

// Definition check: every strict down-set is a chain.
inline bool down_sets_are_chains(const Poset& p) {
  for (std::size_t m = 0; m < p.size(); ++m) {
    const auto lower = p.below(m);
    for (auto a : lower)
      for (auto b : lower)
        if (!p.comparable(a, b)) return false;
  }
  return true;
}

inline SuiteResult forest_wedge(const RunConfig&) {
  Recorder rec(4, "forest-iff-wedge-free");
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto posets = sampling::enumerate_posets(n);
    for (std::size_t i = 0; i < posets.size(); ++i)
      rec.instance(i, [&] {
        const Poset& p = posets[i];
        const bool forest = p.is_forest();
        const bool wedge_free = !p.find_wedge().has_value();
        rec.check(forest == wedge_free, "forest flag disagrees with wedge search, n=" + std::to_string(n));
        rec.check(forest == down_sets_are_chains(p), "forest flag disagrees with definition, n=" + std::to_string(n));
        const auto report = p.classify_forest();
        rec.check(report.is_forest == forest && report.witness.has_value() != forest,
                  "classify_forest inconsistent, n=" + std::to_string(n));
      });
  }
  return std::move(rec).result();
}

inline SuiteResult lattice_forest(const RunConfig& cfg) {
  Recorder rec(5, "lattice-forest-suprema");
  for (std::size_t i = 0; i < budget(cfg, 500); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 5, i);
      const Poset p = sampling::random_forest(rng, 1, cfg.max_poset_size);
      const LexVector f = sampling::random_vector(rng, p);
      const LexVector zero(p);
      const LexVector g = sup_with_zero(f);
      rec.check(leq(f, g) && leq(zero, g), "sup is not an upper bound" + at(i));
      for (auto k : g.support()) rec.check(sign(f.at(k)) != 0, "sup leaves supp(f)" + at(i));

      auto is_ub = [&](const LexVector& h) { return leq(f, h) && leq(zero, h); };
      for (std::size_t slot = 0; slot < 100; ++slot) {
        std::optional<LexVector> h;
        for (int attempt = 0; attempt < 20 && !h; ++attempt) {
          LexVector cand(p);
          switch (slot % 4) {
            case 0: cand = f + random_positive(p, rng, 1 + rng.below(4)); break;
            case 1: cand = random_positive(p, rng, 1 + rng.below(6)); break;
            case 2: cand = sampling::random_vector(rng, p, 3, 4); break;
            default: cand = g + random_positive(p, rng, 1 + rng.below(3)); break;
          }
          if (is_ub(cand)) h = cand;
        }
        if (!h) h = g + random_positive(p, rng, 1 + rng.below(3));
        rec.check(is_ub(*h), "sampled upper bound invalid" + at(i));
        rec.check(leq(g, *h), "sup not below an upper bound" + at(i));
      }
    });
  return std::move(rec).result();
}

inline SuiteResult lattice_non_forest(const RunConfig& cfg) {
  Recorder rec(6, "lattice-non-forest-descent");
  for (std::size_t i = 0; i < budget(cfg, 100); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 6, i);
      const Poset p = sampling::random_non_forest(rng, std::max<std::size_t>(3, cfg.max_poset_size));
      const NoSupWitness w(p);
      const LexVector zero(p);
      // Start above e_s so both descent moves occur.
      const LexVector start = w.initial_upper_bound() + random_positive(p, rng, rng.below(4));
      const DescentChain chain = w.chain_from(start, 50);
      rec.check(chain.upper_bounds.size() == 51, "chain too short" + at(i));
      for (std::size_t k = 0; k < chain.upper_bounds.size(); ++k) {
        const auto& h = chain.upper_bounds[k];
        rec.check(leq(w.f(), h) && leq(zero, h), "chain entry is not an upper bound" + at(i));
        if (k > 0) rec.check(strictly_less(h, chain.upper_bounds[k - 1]), "chain not strictly decreasing" + at(i));
      }
    });
  return std::move(rec).result();
}

inline SuiteResult generating_set(const RunConfig& cfg) {
  Recorder rec(7, "generating-set-decomposition");
  for (std::size_t i = 0; i < budget(cfg, 1000); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 7, i);
      const Poset p = sampling::random_poset(rng, 1, cfg.max_poset_size);
      const LexVector f = mixed_positive(rng, p, i % 2 == 1);
      const auto d = decompose(f, [&](const LexVector& head, const LexVector& rest) {
        rec.check(head.is_positive() && rest.is_positive(), "split part not positive" + at(i));
      });
      for (const auto& term : d) {
        rec.check(sign(term.mu) > 0, "nonpositive coefficient" + at(i));
        rec.check(is_valid(p, term.gen), "invalid generator" + at(i));
        rec.check(to_vector(p, term.gen).is_positive(), "generator not positive" + at(i));
      }
      rec.check(recombine(p, d) == f, "recombination differs from input" + at(i));
    });
  return std::move(rec).result();
}

inline SuiteResult tensor_cone(const RunConfig& cfg) {
  Recorder rec(8, "projective-tensor-cone");
  const std::size_t factor = std::min<std::size_t>(4, cfg.max_poset_size);
  for (std::size_t i = 0; i < budget(cfg, 500); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 8, i);
      const Poset s = sampling::random_poset(rng, 1, factor);
      const Poset t = sampling::random_poset(rng, 1, factor);
      const Poset st = product(s, t);
      const LexVector u = mixed_positive(rng, st, rng.chance(1, 2));
      const TensorRep rep = kp_decompose(u);
      for (const auto& term : rep)
        rec.check(term.left.is_positive() && term.right.is_positive(), "tensor component not positive" + at(i));
      rec.check(flatten(st, rep) == u, "flatten(kp_decompose(u)) != u" + at(i));
    });
  for (std::size_t i = 0; i < budget(cfg, 500); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 0x800 + 8, i);
      const Poset s = sampling::random_poset(rng, 1, factor);
      const Poset t = sampling::random_poset(rng, 1, factor);
      const Poset st = product(s, t);
      TensorRep rep;
      for (std::size_t k = 1 + rng.below(4); k > 0; --k)
        rep.push_back({mixed_positive(rng, s, rng.chance(1, 2)), mixed_positive(rng, t, rng.chance(1, 2))});
      rec.check(kp_member(flatten(st, rep)), "positive tensor sum outside the cone" + at(i));
    });
  return std::move(rec).result();
}

inline SuiteResult main_theorem(const RunConfig& cfg) {
  Recorder rec(9, "projective-cone-is-pointed");
  for (std::size_t i = 0; i < budget(cfg, 50); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 9, i);
      const FinCone x = random_pointed_cone(rng, cfg.max_dim, 5);
      const FinCone y = random_pointed_cone(rng, cfg.max_dim, 5);
      const auto report = kp_pointedness_check(x, y, 100, rng.next());
      rec.check(report.lp_route_ok, "LP route found nonzero u with +-u in K_p" + at(i));
      rec.check(report.embedding_route_ok, "embedding route failed" + at(i));
      rec.check(report.generators_checked == x.generators().size() * y.generators().size(),
                "embedding route skipped generators" + at(i));
    });
  return std::move(rec).result();
}

inline SuiteResult lex_maximal(const RunConfig& cfg) {
  Recorder rec(10, "lex-embedding");
  for (std::size_t i = 0; i < budget(cfg, 100); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 10, i);
      const FinCone c = random_pointed_cone(rng, cfg.max_dim, 5);
      const Matrix a = lex_embed(c).a;
      rec.check(sgn(linalg::determinant(a)) != 0, "embedding is singular" + at(i));
      for (const auto& g : c.generators())
        rec.check(linalg::lex_positive(linalg::multiply(a, g)), "generator image not lex-positive" + at(i));
      Vec v(c.dim(), Rational(0));
      for (const auto& g : c.generators()) {
        const Rational coef(rng.range(0, 3));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += coef * g[k];
      }
      const Vec image = linalg::multiply(a, v);
      rec.check(linalg::lex_positive(image) || linalg::is_zero(image), "cone element image not lex-positive" + at(i));
    });
  return std::move(rec).result();
}

inline SuiteResult classification(const RunConfig& cfg) {
  Recorder rec(11, "forest-term-round-trip");
  auto round_trip = [&](const Poset& f, const std::string& where) {
    const LexUnionTerm t = forest_to_term(f);
    rec.check(dimension(t) == f.size(), "term dimension differs from |F|" + where);
    const Poset back = term_to_forest(t);
    rec.check(back.is_forest(), "term_to_forest produced a non-forest" + where);
    rec.check(canonical_form(back) == canonical_form(f), "round trip changed the forest" + where);
  };
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto forests = sampling::enumerate_forests(n);
    for (std::size_t i = 0; i < forests.size(); ++i)
      rec.instance(i, [&] { round_trip(forests[i], " (n=" + std::to_string(n) + ")"); });
  }
  for (std::size_t i = 0; i < budget(cfg, 200); ++i)
    rec.instance(i, [&] {
      Rng rng = Rng::derive(cfg.seed, 11, i);
      round_trip(sampling::random_forest(rng, 1, cfg.max_poset_size), at(i));
    });
  return std::move(rec).result();
}

}  // namespace detail

struct Suite {
  int criterion;
  std::string name;
  SuiteResult (*run)(const RunConfig&);
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {1, "cone-axioms", detail::cone_axioms},
      {2, "chain-antichain-specialisations", detail::specialisations},
      {3, "dual-cone", detail::dual_cone},
      {4, "forest-iff-wedge-free", detail::forest_wedge},
      {5, "lattice-forest-suprema", detail::lattice_forest},
      {6, "lattice-non-forest-descent", detail::lattice_non_forest},
      {7, "generating-set-decomposition", detail::generating_set},
      {8, "projective-tensor-cone", detail::tensor_cone},
      {9, "projective-cone-is-pointed", detail::main_theorem},
      {10, "lex-embedding", detail::lex_maximal},
      {11, "forest-term-round-trip", detail::classification},
  };
  return all;
}

// Runs the selected suites ("all", a suite name, or a criterion number).
// Results are always reported in criterion order.
inline Report run(const RunConfig& cfg) {
  std::vector<const Suite*> selected;
  for (const auto& s : suites())
    if (cfg.suite == "all" || cfg.suite == s.name || cfg.suite == std::to_string(s.criterion))
      selected.push_back(&s);
  if (selected.empty()) throw ParseError("unknown suite '" + cfg.suite + "'");

  Report report{cfg, {}};
  if (cfg.parallel) {
    std::vector<std::future<SuiteResult>> pending;
    for (const auto* s : selected) pending.push_back(std::async(std::launch::async, s->run, cfg));
    for (auto& f : pending) report.suites.push_back(f.get());
  } else {
    for (const auto* s : selected) report.suites.push_back(s->run(cfg));
  }
  return report;
}

}  // namespace lexcone::selfcheck
