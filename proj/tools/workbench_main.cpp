#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "wb/alba.hpp"
#include "wb/alc.hpp"
#include "wb/axioms.hpp"
#include "wb/canonical.hpp"
#include "wb/classifier.hpp"
#include "wb/prover.hpp"
#include "wb/repro.hpp"
#include "wb/sweep.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

wb::Lang lang_from(const std::string& s) {
  if (s == "si") return wb::Lang::SI;
  if (s == "prod") return wb::Lang::Prod;
  if (s == "lc") return wb::Lang::LC;
  if (s == "lc+") return wb::Lang::LCX;
  throw CLI::ValidationError("--lang must be one of si, prod, lc, lc+");
}

nlohmann::json derivation_json(const wb::AlcDerivation& d) {
  nlohmann::json steps = nlohmann::json::array();
  for (size_t i = 0; i < d.steps.size(); ++i) {
    steps.push_back({{"rule", d.steps[i].rule + (d.steps[i].up ? "^" : "")},
                     {"operand", d.steps[i].operand},
                     {"arg", d.steps[i].arg},
                     {"state", wb::print(d.states[i + 1])}});
  }
  return {{"input", wb::print(d.input)}, {"steps", steps}, {"output", wb::print(d.final_state().goal)}};
}

nlohmann::json proof_json(const wb::DerivationTree& t) {
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : t.premises) premises.push_back(proof_json(p));
  return {{"sequent", wb::print(t.conclusion)}, {"rule", t.rule}, {"premises", premises}};
}

void print_tree(const wb::DerivationTree& t, int indent, std::ostream& out) {
  out << std::string(indent * 2, ' ') << wb::print(t.conclusion) << "   [" << t.rule << "]\n";
  for (const auto& p : t.premises) print_tree(p, indent + 1, out);
}

// A sequent not proved within bounds is refuted if some small algebra
// validating the system's defining sequents refutes it.
bool oracle_refutes(const wb::Inequality& s, const std::string& system) {
  std::vector<wb::Inequality> defining = wb::system_axioms(system);
  for (const auto& alg : wb::catalog()) {
    if (!wb::validate_all(alg, defining)) continue;
    if (!wb::validate(alg, s)) return true;
  }
  for (int n = 1; n <= 2; ++n)
    for (const auto& f : wb::enumerate_ternary(n)) {
      wb::FiniteBDRG alg = wb::dual_algebra_ternary(f);
      if (!wb::validate_all(alg, defining)) continue;
      if (!wb::validate(alg, s)) return true;
    }
  return false;
}

wb::RuleSet load_system(const std::string& spec) {
  for (const auto& sys : wb::system_table())
    if (sys.name == spec) return wb::make_system(spec);
  // otherwise treat as a rule file
  wb::RuleSet rs;
  rs.name = spec;
  rs.rules = wb::rules_from_json(wb::read_file(spec));
  return rs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for strict implication logics over the Lambek calculus"};
  app.require_subcommand(1);

  std::string text, lang_name = "lc+", system = "bdfnl", emit = "tree", algebra_file, out_file, rule_name = "rule";
  std::string pair_name = "tr", semantics = "binary", target;
  int depth = 40, max_size = 0, frame_size = 3, alc_depth = 25;
  uint64_t seed = 0;
  bool write_golden = false, as_json = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse_cmd->add_option("text", text)->required();
  parse_cmd->add_option("--lang", lang_name, "si, prod, lc or lc+");

  auto* classify_cmd = app.add_subcommand("classify", "inductive classification of an si sequent");
  classify_cmd->add_option("text", text)->required();

  auto* alba_cmd = app.add_subcommand("alba", "reduce an si sequent to pure quasi-inequalities");
  alba_cmd->add_option("text", text)->required();
  alba_cmd->add_flag("--json", as_json);

  auto* alc_cmd = app.add_subcommand("alc", "compute a product-language correspondent");
  alc_cmd->add_option("text", text)->required();
  alc_cmd->add_option("--depth", alc_depth);
  alc_cmd->add_flag("--json", as_json);

  auto* synth_cmd = app.add_subcommand("synthesize", "turn a product sequent into a structural rule");
  synth_cmd->add_option("text", text)->required();
  synth_cmd->add_option("--name", rule_name);
  synth_cmd->add_option("--out", out_file, "write a rule file consumable by prove --system");

  auto* prove_cmd = app.add_subcommand("prove", "backward proof search");
  prove_cmd->add_option("text", text)->required();
  prove_cmd->add_option("--system", system, "system name or rule file");
  prove_cmd->add_option("--depth", depth);
  prove_cmd->add_option("--max-size", max_size);
  prove_cmd->add_option("--emit", emit, "json or tree");

  auto* oracle_cmd = app.add_subcommand("oracle", "finite semantic checks");
  auto* equiv_cmd = oracle_cmd->add_subcommand("equiv", "axiom vs product correspondent on frame duals");
  equiv_cmd->add_option("--pair", pair_name, "axiom tag (I, Tr, MP, ...)");
  equiv_cmd->add_option("--size", frame_size);
  equiv_cmd->add_option("--semantics", semantics, "binary or ternary");
  auto* validate_cmd = oracle_cmd->add_subcommand("validate", "validity on an algebra file");
  validate_cmd->add_option("--algebra", algebra_file)->required();
  validate_cmd->add_option("--sequent", text)->required();

  auto* repro_cmd = app.add_subcommand("repro", "regenerate a bundled table and diff it");
  repro_cmd->add_option("target", target,
                        "table1-alba, table3-alc, binary-correspondents, ternary-correspondents, appendix-a")
      ->required();
  repro_cmd->add_flag("--write", write_golden, "rewrite the golden file");
  repro_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*parse_cmd) {
      std::cout << wb::print(wb::parse_formula(text, lang_from(lang_name))) << "\n";
      return 0;
    }
    if (*classify_cmd) {
      wb::Inequality s = wb::parse_inequality(text, wb::Lang::SI);
      auto cert = wb::find_certificate(s);
      if (cert)
        std::cout << wb::certificate_json(*cert) << "\n";
      else
        std::cout << "{\"inductive\": false}" << "\n";
      return 0;
    }
    if (*alba_cmd) {
      wb::Inequality s = wb::parse_inequality(text, wb::Lang::SI);
      wb::AlbaResult res = wb::run_alba(s);
      if (as_json) {
        nlohmann::json j;
        j["input"] = wb::print(s);
        j["preprocessed"] = nlohmann::json::array();
        for (const auto& p : res.preprocessed) j["preprocessed"].push_back(wb::print(p));
        j["results"] = nlohmann::json::array();
        j["trace"] = nlohmann::json::array();
        if (res.success) {
          for (const auto& run : res.runs) {
            j["results"].push_back(wb::canonical_print(run.result));
            nlohmann::json tr = nlohmann::json::array();
            for (const auto& step : run.trace) tr.push_back({{"rule", step.rule}, {"on", step.detail}});
            j["trace"].push_back(tr);
          }
        } else {
          j["failure"] = wb::print(wb::QuasiInequality{res.stuck->inequalities, res.stuck->goal});
        }
        std::cout << j.dump(2) << "\n";
      } else if (res.success) {
        for (const auto& run : res.runs) std::cout << wb::canonical_print(run.result) << "\n";
      } else {
        std::cout << "failure: " << wb::print(wb::QuasiInequality{res.stuck->inequalities, res.stuck->goal})
                  << "\n";
        return 1;
      }
      return 0;
    }
    if (*alc_cmd) {
      wb::Inequality s = wb::parse_inequality(text, wb::Lang::LC);
      auto d = wb::run_alc(s, alc_depth);
      if (!d) {
        std::cout << "no correspondent found\n";
        return 1;
      }
      if (as_json)
        std::cout << derivation_json(*d).dump(2) << "\n";
      else
        std::cout << wb::print(wb::canonical_prop_vars(d->final_state().goal)) << "\n";
      return 0;
    }
    if (*synth_cmd) {
      wb::Inequality sigma = wb::parse_inequality(text, wb::Lang::Prod);
      wb::StructuralRule rule = wb::synthesize_rule(rule_name, sigma);
      nlohmann::json j = {{"name", rule.name},
                          {"sequent", wb::print(sigma)},
                          {"good", wb::is_good(sigma)},
                          {"preserves_subformula", wb::preserves_subformula(sigma)}};
      std::cout << j.dump(2) << "\n";
      if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << wb::rules_to_json({rule});
      }
      return 0;
    }
    if (*prove_cmd) {
      wb::RuleSet rules = load_system(system);
      wb::ConsecutionSequent seq = wb::parse_consecution(text);
      wb::ProofLimits limits{depth, max_size};
      auto proof = wb::prove(seq, rules, limits);
      if (proof) {
        if (emit == "json")
          std::cout << proof_json(*proof).dump(2) << "\n";
        else
          print_tree(*proof, 0, std::cout);
        return 0;
      }
      wb::Inequality as_formula{wb::tau(seq.antecedent), seq.succedent};
      bool refuted = false;
      for (const auto& sys : wb::system_table())
        if (sys.name == system) refuted = oracle_refutes(as_formula, system);
      std::cout << (refuted ? "refuted\n" : "unknown\n");
      return refuted ? 2 : 1;
    }
    if (*equiv_cmd) {
      wb::Inequality a = wb::axiom(pair_name);
      auto b = wb::product_correspondent(pair_name);
      if (!b) throw std::invalid_argument("no product correspondent recorded for " + pair_name);
      wb::EquivalenceReport rep;
      if (semantics == "binary")
        rep = wb::equivalence_sweep(a, *b, wb::enumerate_binary(frame_size));
      else
        rep = wb::equivalence_sweep(a, *b, wb::enumerate_ternary(frame_size));
      std::cout << "algebras=" << rep.algebras << " mismatches=" << rep.mismatches << "\n";
      return rep.mismatches == 0 ? 0 : 1;
    }
    if (*validate_cmd) {
      wb::FiniteBDRG alg = wb::algebra_from_json(wb::read_file(algebra_file));
      wb::Inequality s = wb::parse_inequality(text, wb::Lang::LC);
      bool ok = wb::validate(alg, s);
      std::cout << (ok ? "valid" : "invalid") << " on " << alg.name() << "\n";
      return ok ? 0 : 1;
    }
    if (*repro_cmd) return wb::run_repro(target, write_golden, std::cout);
  } catch (const wb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wb::LangError& e) {
    std::cerr << "language error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
