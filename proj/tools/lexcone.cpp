// lexcone: command-line front end for the lexicographic cone library.
//
// Boolean queries print "true"/"false"; structural results print JSON.
// Exit codes: 0 success, 1 selfcheck property violation, 2 usage, parse or
// precondition errors.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lexcone/classify.hpp"
#include "lexcone/cone.hpp"
#include "lexcone/generators.hpp"
#include "lexcone/io.hpp"
#include "lexcone/lattice.hpp"
#include "lexcone/lexvec.hpp"
#include "lexcone/poset.hpp"
#include "lexcone/selfcheck.hpp"
#include "lexcone/tensor.hpp"

namespace {

using lexcone::io::Json;
namespace io = lexcone::io;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }
void print(bool b) { std::cout << (b ? "true" : "false") << '\n'; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LEXCONE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw lexcone::ParseError(std::string("LEXCONE_SEED is not an integer: ") + env);
    }
  }
  return 42;
}

Json report_json(const lexcone::selfcheck::Report& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    Json entry{{"criterion", s.criterion},
               {"name", s.name},
               {"instances", s.instances},
               {"checks", s.checks},
               {"failures", s.failures},
               {"passed", s.passed()}};
    if (!s.first_failure.empty()) entry["first_failure"] = s.first_failure;
    suites.push_back(entry);
  }
  return Json{{"seed", r.config.seed},
              {"trials", r.config.trials},
              {"max_poset_size", r.config.max_poset_size},
              {"max_dim", r.config.max_dim},
              {"suite", r.config.suite},
              {"suites", suites},
              {"passed", r.passed()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lexicographic cones over finite posets"};
  app.require_subcommand(1);

  // Argument holders. Poset, vector, cone and term arguments accept a file
  // path or inline JSON.
  std::string poset_arg, vec_arg, lhs_arg, rhs_arg, left_arg, right_arg, rep_arg, cone_arg, matrix_arg,
      term_arg, element_arg, decomposition_arg;
  std::size_t steps = 5, kp_trials = 100;
  std::uint64_t seed = 0;
  lexcone::selfcheck::RunConfig run_cfg;
  bool sequential = false;

  int exit_code = 0;
  auto lex_vector = [&](const lexcone::Poset& p, const std::string& arg) {
    return io::vector_from_json(p, io::load(arg));
  };
  auto load_poset = [&](const std::string& arg) { return io::poset_from_json(io::load(arg)); };

  // poset check|info
  auto* poset_cmd = app.add_subcommand("poset", "Validate or describe a poset file");
  poset_cmd->require_subcommand(1);
  auto* poset_check = poset_cmd->add_subcommand("check", "Parse a poset; prints true when valid");
  poset_check->add_option("poset", poset_arg, "Poset JSON")->required();
  poset_check->callback([&] {
    load_poset(poset_arg);
    print(true);
  });
  auto* poset_info = poset_cmd->add_subcommand("info", "Order structure summary");
  poset_info->add_option("poset", poset_arg, "Poset JSON")->required();
  poset_info->callback([&] {
    const auto p = load_poset(poset_arg);
    Json rel = Json::array();
    for (const auto& [a, b] : p.relations()) rel.push_back({a, b});
    print(Json{{"elements", p.labels()},
               {"relations", rel},
               {"minimal", p.minimal_elements()},
               {"forest", io::to_json(p.classify_forest())},
               {"linear_extension", p.linear_extension()},
               {"is_lattice", lexcone::is_lattice(p)}});
  });

  auto* positive = app.add_subcommand("positive", "Is the vector in Lex(S)_+?");
  positive->add_option("--poset", poset_arg)->required();
  positive->add_option("--vec", vec_arg)->required();
  positive->callback([&] {
    const auto p = load_poset(poset_arg);
    print(lex_vector(p, vec_arg).is_positive());
  });

  auto* leq = app.add_subcommand("leq", "Is lhs <= rhs in Lex(S)?");
  leq->add_option("--poset", poset_arg)->required();
  leq->add_option("--lhs", lhs_arg)->required();
  leq->add_option("--rhs", rhs_arg)->required();
  leq->callback([&] {
    const auto p = load_poset(poset_arg);
    print(lexcone::leq(lex_vector(p, lhs_arg), lex_vector(p, rhs_arg)));
  });

  for (const char* name : {"sup", "inf"}) {
    auto* cmd = app.add_subcommand(name, std::string("Lattice ") + name + " of two vectors (forests only)");
    cmd->add_option("--poset", poset_arg)->required();
    cmd->add_option("--lhs", lhs_arg)->required();
    cmd->add_option("--rhs", rhs_arg)->required();
    const bool is_sup = std::string(name) == "sup";
    cmd->callback([&, is_sup] {
      const auto p = load_poset(poset_arg);
      const auto f = lex_vector(p, lhs_arg), g = lex_vector(p, rhs_arg);
      print(io::to_json(is_sup ? lexcone::sup(f, g) : lexcone::inf(f, g)));
    });
  }

  auto* abs_cmd = app.add_subcommand("abs", "Absolute value |f| (forests only)");
  abs_cmd->add_option("--poset", poset_arg)->required();
  abs_cmd->add_option("--vec", vec_arg)->required();
  abs_cmd->callback([&] {
    const auto p = load_poset(poset_arg);
    print(io::to_json(lexcone::abs(lex_vector(p, vec_arg))));
  });

  auto* nosup = app.add_subcommand("nosup-witness", "Descending upper bounds certifying a missing supremum");
  nosup->add_option("--poset", poset_arg)->required();
  nosup->add_option("--steps", steps, "Number of descent steps")->capture_default_str();
  nosup->callback([&] {
    const auto w = lexcone::no_sup_witness(load_poset(poset_arg));
    Json out = io::to_json(w.chain(steps));
    out["wedge"] = {w.wedge().s, w.wedge().t, w.wedge().m};
    print(out);
  });

  auto* decompose = app.add_subcommand("decompose", "Positive combination of canonical generators");
  decompose->add_option("--poset", poset_arg)->required();
  decompose->add_option("--vec", vec_arg)->required();
  decompose->callback([&] {
    const auto p = load_poset(poset_arg);
    print(io::to_json(p, lexcone::decompose(lex_vector(p, vec_arg))));
  });

  auto* recombine = app.add_subcommand("recombine", "Vector denoted by a decomposition");
  recombine->add_option("--poset", poset_arg)->required();
  recombine->add_option("--decomposition", decomposition_arg)->required();
  recombine->callback([&] {
    const auto p = load_poset(poset_arg);
    print(io::to_json(lexcone::recombine(p, io::decomposition_from_json(p, io::load(decomposition_arg)))));
  });

  auto* dual = app.add_subcommand("dual-gens", "Generators of the dual cone");
  dual->add_option("--poset", poset_arg)->required();
  dual->callback([&] { print(io::to_json(lexcone::dual_generators(load_poset(poset_arg)))); });

  auto* dual_witness = app.add_subcommand("dual-witness", "Cone element pairing negatively with a functional");
  dual_witness->add_option("--poset", poset_arg)->required();
  dual_witness->add_option("--element", element_arg, "Nonminimal element s")->required();
  dual_witness->add_option("--functional", vec_arg, "Nonnegative functional with g(s) > 0")->required();
  dual_witness->callback([&] {
    const auto p = load_poset(poset_arg);
    const auto w = lexcone::dual_violation_witness(p, element_arg, lex_vector(p, vec_arg));
    print(Json{{"f", io::to_json(w.f)}, {"t", w.t}, {"n", w.n}, {"pairing", io::to_json(w.pairing)}});
  });

  auto product_of = [&] { return lexcone::product(load_poset(left_arg), load_poset(right_arg)); };

  auto* tmember = app.add_subcommand("tensor-member", "Is u in the projective cone of Lex(S) and Lex(T)?");
  tmember->add_option("--left", left_arg, "Poset S")->required();
  tmember->add_option("--right", right_arg, "Poset T")->required();
  tmember->add_option("--vec", vec_arg, "Vector keyed by \"s|t\"")->required();
  tmember->callback([&] { print(lexcone::kp_member(lex_vector(product_of(), vec_arg))); });

  auto* tdecompose = app.add_subcommand("tensor-decompose", "Sum of positive elementary tensors");
  tdecompose->add_option("--left", left_arg, "Poset S")->required();
  tdecompose->add_option("--right", right_arg, "Poset T")->required();
  tdecompose->add_option("--vec", vec_arg, "Vector keyed by \"s|t\"")->required();
  tdecompose->callback([&] { print(io::to_json(lexcone::kp_decompose(lex_vector(product_of(), vec_arg)))); });

  auto* tflatten = app.add_subcommand("tensor-flatten", "Vector on S x T denoted by a tensor representation");
  tflatten->add_option("--left", left_arg, "Poset S")->required();
  tflatten->add_option("--right", right_arg, "Poset T")->required();
  tflatten->add_option("--rep", rep_arg, "Tensor representation")->required();
  tflatten->callback([&] {
    const auto st = product_of();
    const auto rep = io::tensor_rep_from_json(st.left_factor(), st.right_factor(), io::load(rep_arg));
    print(io::to_json(lexcone::flatten(st, rep)));
  });

  // cone member|pointed|dual-vector|embed
  auto* cone_cmd = app.add_subcommand("cone", "Finitely generated rational cones");
  cone_cmd->require_subcommand(1);
  auto load_cone = [&] { return io::cone_from_json(io::load(cone_arg)); };
  auto* cmember = cone_cmd->add_subcommand("member", "Is v a nonnegative combination of the generators?");
  cmember->add_option("--cone", cone_arg)->required();
  cmember->add_option("--vec", vec_arg, "List of rationals")->required();
  cmember->callback([&] { print(lexcone::cone_member(load_cone(), io::rational_list_from_json(io::load(vec_arg)))); });
  auto* cpointed = cone_cmd->add_subcommand("pointed", "Is the generated wedge a cone?");
  cpointed->add_option("--cone", cone_arg)->required();
  cpointed->callback([&] { print(lexcone::is_pointed(load_cone())); });
  auto* cdual = cone_cmd->add_subcommand("dual-vector", "Normal of a closed half-space containing the cone");
  cdual->add_option("--cone", cone_arg)->required();
  cdual->callback([&] { print(io::to_json(lexcone::dual_vector(load_cone()))); });
  auto* cembed = cone_cmd->add_subcommand("embed", "Invertible A with every A g lexicographically positive");
  cembed->add_option("--cone", cone_arg)->required();
  cembed->callback([&] { print(io::to_json(lexcone::lex_embed(load_cone()).a)); });

  // kp check|member
  auto* kp_cmd = app.add_subcommand("kp", "Projective cone of two finitely generated cones");
  kp_cmd->require_subcommand(1);
  auto* kp_check = kp_cmd->add_subcommand("check", "Certify that K_p(X, Y) is pointed, two ways");
  kp_check->add_option("--left", left_arg, "Cone X")->required();
  kp_check->add_option("--right", right_arg, "Cone Y")->required();
  kp_check->add_option("--trials", kp_trials)->capture_default_str();
  kp_check->add_option("--seed", seed);
  kp_check->callback([&] {
    if (kp_check->count("--seed") == 0) seed = default_seed();
    const auto x = io::cone_from_json(io::load(left_arg));
    const auto y = io::cone_from_json(io::load(right_arg));
    print(io::to_json(lexcone::kp_pointedness_check(x, y, kp_trials, seed)));
  });
  auto* kp_member = kp_cmd->add_subcommand("member", "Is the d1 x d2 matrix in K_p(X, Y)?");
  kp_member->add_option("--left", left_arg, "Cone X")->required();
  kp_member->add_option("--right", right_arg, "Cone Y")->required();
  kp_member->add_option("--matrix", matrix_arg, "Row lists of rationals")->required();
  kp_member->callback([&] {
    print(lexcone::kp_member_general(io::cone_from_json(io::load(left_arg)), io::cone_from_json(io::load(right_arg)),
                                     io::matrix_from_json(io::load(matrix_arg))));
  });

  // classify to-term|to-forest|canonical
  auto* classify = app.add_subcommand("classify", "Forests and lexicographic-union terms");
  classify->require_subcommand(1);
  auto* to_term = classify->add_subcommand("to-term", "Forest to its direct sum of R o M terms");
  to_term->add_option("--poset", poset_arg)->required();
  to_term->callback([&] { print(io::to_json(lexcone::forest_to_term(load_poset(poset_arg)))); });
  auto* to_forest = classify->add_subcommand("to-forest", "Term to a forest with fresh labels");
  to_forest->add_option("--term", term_arg)->required();
  to_forest->callback([&] { print(io::to_json(lexcone::term_to_forest(io::term_from_json(io::load(term_arg))))); });
  auto* canonical = classify->add_subcommand("canonical", "Label-free isomorphism code of a forest");
  canonical->add_option("--poset", poset_arg)->required();
  canonical->callback([&] { print(Json(lexcone::canonical_form(load_poset(poset_arg)))); });

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the seeded property suites");
  selfcheck->add_option("--seed", run_cfg.seed, "Default: $LEXCONE_SEED or 42");
  selfcheck->add_option("--trials", run_cfg.trials, "Cap on random instances per suite")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  selfcheck->add_option("--max-poset-size", run_cfg.max_poset_size)->capture_default_str()->check(CLI::Range(3, 12));
  selfcheck->add_option("--max-dim", run_cfg.max_dim)->capture_default_str()->check(CLI::Range(1, 6));
  selfcheck->add_option("--suite", run_cfg.suite, "all, a suite name or a criterion number")->capture_default_str();
  selfcheck->add_flag("--sequential", sequential, "Run suites one after another");
  selfcheck->callback([&] {
    if (selfcheck->count("--seed") == 0) run_cfg.seed = default_seed();
    run_cfg.parallel = !sequential;
    const auto report = lexcone::selfcheck::run(run_cfg);
    print(report_json(report));
    if (!report.passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const lexcone::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
