#include "wb/prover.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace wb {

namespace {

using Path = std::vector<int>;

StructurePtr get_sub(const StructurePtr& s, const Path& path, size_t i = 0) {
  if (i == path.size()) return s;
  return get_sub(path[i] == 0 ? s->left : s->right, path, i + 1);
}

StructurePtr replace_sub(const StructurePtr& s, const Path& path, const StructurePtr& repl, size_t i = 0) {
  if (i == path.size()) return repl;
  if (path[i] == 0) return s->kind == SKind::SProd ? s_prod(replace_sub(s->left, path, repl, i + 1), s->right)
                                                   : s_meet(replace_sub(s->left, path, repl, i + 1), s->right);
  return s->kind == SKind::SProd ? s_prod(s->left, replace_sub(s->right, path, repl, i + 1))
                                 : s_meet(s->left, replace_sub(s->right, path, repl, i + 1));
}

void all_paths(const StructurePtr& s, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  if (s->kind == SKind::Leaf || s->kind == SKind::Hole) return;
  cur.push_back(0);
  all_paths(s->left, cur, out);
  cur.back() = 1;
  all_paths(s->right, cur, out);
  cur.pop_back();
}

std::vector<Path> positions(const StructurePtr& s) {
  std::vector<Path> out;
  Path cur;
  all_paths(s, cur, out);
  return out;
}

bool contains_bot_leaf(const StructurePtr& s) {
  if (s->kind == SKind::Leaf) return s->formula->kind == FKind::Bot;
  if (s->kind == SKind::Hole) return false;
  return contains_bot_leaf(s->left) || contains_bot_leaf(s->right);
}

int sequent_size(const ConsecutionSequent& s) {
  return structure_size(s.antecedent) + formula_size(s.succedent);
}

// A candidate backward step: rule node name plus premises. `wrap` optionally
// interposes bookkeeping nodes (used when weakening the left sibling, which
// is exchange followed by weakening).
struct Move {
  std::string rule;
  std::vector<ConsecutionSequent> premises;
  std::optional<std::pair<std::string, ConsecutionSequent>> inner;  // nested node for two-rule moves
};

class Searcher {
 public:
  Searcher(const RuleSet& rules, ProofLimits limits, const ConsecutionSequent& root)
      : rules_(rules), limits_(limits) {
    max_size_ = limits.max_structure_size > 0 ? limits.max_structure_size : 4 * sequent_size(root);
    if (limits.depth <= 0 || max_size_ <= 0) throw std::invalid_argument("nonpositive search bounds");
  }

  std::optional<DerivationTree> run(const ConsecutionSequent& s) {
    auto [tree, pruned] = search(s, limits_.depth);
    (void)pruned;
    return tree;
  }

 private:
  std::pair<std::optional<DerivationTree>, bool> search(const ConsecutionSequent& seq, int depth) {
    // axioms
    if (seq.antecedent->kind == SKind::Leaf && equal(seq.antecedent->formula, seq.succedent))
      return {DerivationTree{seq, "id", {}}, false};
    if (seq.succedent->kind == FKind::Top) return {DerivationTree{seq, "top", {}}, false};
    if (contains_bot_leaf(seq.antecedent)) return {DerivationTree{seq, "bot", {}}, false};

    std::string key = print(seq);
    if (on_branch_.count(key)) return {std::nullopt, true};
    auto it = failed_.find(key);
    if (it != failed_.end() && depth <= it->second) return {std::nullopt, false};
    if (depth <= 0) return {std::nullopt, false};

    on_branch_.insert(key);
    auto [tree, pruned] = expand(seq, depth);
    on_branch_.erase(key);
    if (!tree && !pruned) {
      int& d = failed_[key];
      d = std::max(d, depth);
    }
    return {tree, pruned};
  }

  std::pair<std::optional<DerivationTree>, bool> expand(const ConsecutionSequent& seq, int depth) {
    // invertible decompositions, one at a time
    for (const Path& p : positions(seq.antecedent)) {
      StructurePtr sub = get_sub(seq.antecedent, p);
      if (sub->kind != SKind::Leaf) continue;
      const FormulaPtr& f = sub->formula;
      if (f->kind == FKind::And)
        return close(seq, depth, {"and-left",
                                  {{replace_sub(seq.antecedent, p, s_meet(s_leaf(f->left), s_leaf(f->right))),
                                    seq.succedent}}});
      if (f->kind == FKind::Prod)
        return close(seq, depth, {"prod-left",
                                  {{replace_sub(seq.antecedent, p, s_prod(s_leaf(f->left), s_leaf(f->right))),
                                    seq.succedent}}});
      if (f->kind == FKind::Or)
        return close(seq, depth, {"or-left",
                                  {{replace_sub(seq.antecedent, p, s_leaf(f->left)), seq.succedent},
                                   {replace_sub(seq.antecedent, p, s_leaf(f->right)), seq.succedent}}});
    }
    if (seq.succedent->kind == FKind::Imp)
      return close(seq, depth, {"imp-right",
                                {{s_prod(s_leaf(seq.succedent->left), seq.antecedent), seq.succedent->right}}});
    if (seq.succedent->kind == FKind::Coimp)
      return close(seq, depth, {"coimp-right",
                                {{s_prod(seq.antecedent, s_leaf(seq.succedent->right)), seq.succedent->left}}});

    bool pruned = false;
    auto attempt = [&](const Move& m) -> std::optional<DerivationTree> {
      for (const auto& pr : m.premises)
        if (structure_size(pr.antecedent) > max_size_) {
          return std::nullopt;
        }
      std::vector<DerivationTree> subs;
      for (const auto& pr : m.premises) {
        auto [t, pr_pruned] = search(pr, depth - (m.inner ? 2 : 1));
        pruned = pruned || pr_pruned;
        if (!t) return std::nullopt;
        subs.push_back(std::move(*t));
      }
      if (m.inner) {
        DerivationTree innermost{m.inner->second, m.rule, std::move(subs)};
        return DerivationTree{ConsecutionSequent{}, m.inner->first, {std::move(innermost)}};
      }
      return DerivationTree{ConsecutionSequent{}, m.rule, std::move(subs)};
    };

    for (const Move& m : choice_moves(seq)) {
      if (auto t = attempt(m)) {
        t->conclusion = seq;
        return {std::move(*t), pruned};
      }
    }
    return {std::nullopt, pruned};
  }

  std::pair<std::optional<DerivationTree>, bool> close(const ConsecutionSequent& seq, int depth, Move m) {
    bool pruned = false;
    std::vector<DerivationTree> subs;
    for (const auto& pr : m.premises) {
      if (structure_size(pr.antecedent) > max_size_) return {std::nullopt, false};
      auto [t, p] = search(pr, depth - 1);
      pruned = pruned || p;
      if (!t) return {std::nullopt, pruned};
      subs.push_back(std::move(*t));
    }
    return {DerivationTree{seq, m.rule, std::move(subs)}, pruned};
  }

  std::vector<Move> choice_moves(const ConsecutionSequent& seq) {
    std::vector<Move> moves;
    const StructurePtr& ante = seq.antecedent;
    const FormulaPtr& succ = seq.succedent;

    if (succ->kind == FKind::And && ante->kind == SKind::SMeet)
      moves.push_back({"and-right", {{ante->left, succ->left}, {ante->right, succ->right}}});
    if (succ->kind == FKind::Or) {
      moves.push_back({"or-right-1", {{ante, succ->left}}});
      moves.push_back({"or-right-2", {{ante, succ->right}}});
    }
    if (succ->kind == FKind::Prod && ante->kind == SKind::SProd)
      moves.push_back({"prod-right", {{ante->left, succ->left}, {ante->right, succ->right}}});

    for (const Path& p : positions(ante)) {
      StructurePtr sub = get_sub(ante, p);
      if (sub->kind == SKind::SProd && sub->right->kind == SKind::Leaf &&
          sub->right->formula->kind == FKind::Imp) {
        const FormulaPtr& f = sub->right->formula;
        moves.push_back({"imp-left",
                         {{sub->left, f->left}, {replace_sub(ante, p, s_leaf(f->right)), succ}}});
      }
      if (sub->kind == SKind::SProd && sub->left->kind == SKind::Leaf &&
          sub->left->formula->kind == FKind::Coimp) {
        const FormulaPtr& f = sub->left->formula;
        moves.push_back({"coimp-left",
                         {{replace_sub(ante, p, s_leaf(f->left)), succ}, {sub->right, f->right}}});
      }
    }

    for (const auto& rule : rules_.rules) {
      std::vector<std::string> cvars = prop_vars(rule.conclusion_pattern());
      std::vector<std::string> pvars = prop_vars(rule.premise_pattern());
      bool closed = std::all_of(pvars.begin(), pvars.end(), [&](const std::string& v) {
        return std::find(cvars.begin(), cvars.end(), v) != cvars.end();
      });
      if (!closed) continue;  // cannot guess structures for unbound metavariables
      for (const Path& p : positions(ante)) {
        std::map<std::string, StructurePtr> binding;
        if (!match_pattern(rule.conclusion_pattern(), get_sub(ante, p), binding)) continue;
        moves.push_back({rule.name,
                         {{replace_sub(ante, p, instantiate_pattern(rule.premise_pattern(), binding)), succ}}});
      }
    }

    for (const Path& p : positions(ante)) {
      StructurePtr sub = get_sub(ante, p);
      if (sub->kind != SKind::SMeet) continue;
      moves.push_back({"meet-weaken", {{replace_sub(ante, p, sub->right), succ}}});
      // dropping the right sibling is exchange followed by weakening
      Move drop_right{"meet-weaken", {{replace_sub(ante, p, sub->left), succ}}};
      drop_right.inner = {"meet-exchange",
                          ConsecutionSequent{replace_sub(ante, p, s_meet(sub->right, sub->left)), succ}};
      moves.push_back(std::move(drop_right));
      moves.push_back({"meet-exchange", {{replace_sub(ante, p, s_meet(sub->right, sub->left)), succ}}});
      if (sub->right->kind == SKind::SMeet)
        moves.push_back({"meet-assoc",
                         {{replace_sub(ante, p, s_meet(s_meet(sub->left, sub->right->left), sub->right->right)),
                           succ}}});
    }
    for (const Path& p : positions(ante)) {
      StructurePtr sub = get_sub(ante, p);
      moves.push_back({"meet-contract", {{replace_sub(ante, p, s_meet(sub, sub)), succ}}});
    }
    return moves;
  }

  const RuleSet& rules_;
  ProofLimits limits_;
  int max_size_;
  std::unordered_map<std::string, int> failed_;
  std::unordered_set<std::string> on_branch_;
};

}  // namespace

std::optional<DerivationTree> prove(const ConsecutionSequent& s, const RuleSet& rules, ProofLimits limits) {
  Searcher searcher(rules, limits, s);
  return searcher.run(s);
}

std::optional<DerivationTree> translate_and_prove(const Inequality& s, const RuleSet& rules, ProofLimits limits) {
  if (!in_lang(s.lhs, Lang::LC) || !in_lang(s.rhs, Lang::LC))
    throw LangError("formula sequents must be in lc: " + print(s));
  return prove({s_leaf(s.lhs), s.rhs}, rules, limits);
}

namespace {

// Does `premise` arise from `conclusion` by replacing the subtree at some
// path with `to`, where the subtree previously matched `from_check`?
bool single_rewrite(const StructurePtr& conclusion, const StructurePtr& premise,
                    const std::function<bool(const StructurePtr&)>& from_check,
                    const std::function<StructurePtr(const StructurePtr&)>& to) {
  for (const Path& p : positions(conclusion)) {
    StructurePtr sub = get_sub(conclusion, p);
    if (!from_check(sub)) continue;
    StructurePtr rewritten = to(sub);
    if (rewritten && equal(replace_sub(conclusion, p, rewritten), premise)) return true;
  }
  return false;
}

bool leaf_kind(const StructurePtr& s, FKind k) { return s->kind == SKind::Leaf && s->formula->kind == k; }

// mix: premise2's antecedent with some phi-leaves replaced by delta equals
// the conclusion's antecedent.
bool mix_replacement(const StructurePtr& right, const StructurePtr& conclusion, const FormulaPtr& phi,
                     const StructurePtr& delta) {
  if (equal(right, conclusion)) return true;
  if (leaf_kind(right, phi->kind) && equal(right->formula, phi) && equal(conclusion, delta)) return true;
  if (right->kind != conclusion->kind || right->kind == SKind::Leaf) return false;
  if (right->kind == SKind::Hole) return false;
  return mix_replacement(right->left, conclusion->left, phi, delta) &&
         mix_replacement(right->right, conclusion->right, phi, delta);
}

}  // namespace

bool check_proof(const DerivationTree& d, const RuleSet& rules, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg + " at " + print(d.conclusion) + " [" + d.rule + "]";
    return false;
  };
  const ConsecutionSequent& c = d.conclusion;
  const std::string& r = d.rule;
  size_t n = d.premises.size();
  auto prem = [&](size_t i) -> const ConsecutionSequent& { return d.premises[i].conclusion; };

  bool ok = false;
  if (r == "id") {
    ok = n == 0 && c.antecedent->kind == SKind::Leaf && equal(c.antecedent->formula, c.succedent);
  } else if (r == "top") {
    ok = n == 0 && c.succedent->kind == FKind::Top;
  } else if (r == "bot") {
    ok = n == 0 && contains_bot_leaf(c.antecedent);
  } else if (r == "and-left" || r == "prod-left") {
    FKind fk = r == "and-left" ? FKind::And : FKind::Prod;
    SKind sk = r == "and-left" ? SKind::SMeet : SKind::SProd;
    ok = n == 1 && equal(prem(0).succedent, c.succedent) &&
         single_rewrite(c.antecedent, prem(0).antecedent,
                        [&](const StructurePtr& s) { return leaf_kind(s, fk); },
                        [&](const StructurePtr& s) -> StructurePtr {
                          auto l = s_leaf(s->formula->left), rr = s_leaf(s->formula->right);
                          return sk == SKind::SMeet ? s_meet(l, rr) : s_prod(l, rr);
                        });
  } else if (r == "or-left") {
    ok = n == 2 && equal(prem(0).succedent, c.succedent) && equal(prem(1).succedent, c.succedent) &&
         single_rewrite(c.antecedent, prem(0).antecedent,
                        [&](const StructurePtr& s) { return leaf_kind(s, FKind::Or); },
                        [&](const StructurePtr& s) { return s_leaf(s->formula->left); }) &&
         single_rewrite(c.antecedent, prem(1).antecedent,
                        [&](const StructurePtr& s) { return leaf_kind(s, FKind::Or); },
                        [&](const StructurePtr& s) { return s_leaf(s->formula->right); });
  } else if (r == "imp-right") {
    ok = n == 1 && c.succedent->kind == FKind::Imp &&
         equal(prem(0).antecedent, s_prod(s_leaf(c.succedent->left), c.antecedent)) &&
         equal(prem(0).succedent, c.succedent->right);
  } else if (r == "coimp-right") {
    ok = n == 1 && c.succedent->kind == FKind::Coimp &&
         equal(prem(0).antecedent, s_prod(c.antecedent, s_leaf(c.succedent->right))) &&
         equal(prem(0).succedent, c.succedent->left);
  } else if (r == "and-right" || r == "prod-right") {
    FKind fk = r == "and-right" ? FKind::And : FKind::Prod;
    SKind sk = r == "and-right" ? SKind::SMeet : SKind::SProd;
    ok = n == 2 && c.succedent->kind == fk && c.antecedent->kind == sk &&
         equal(prem(0).antecedent, c.antecedent->left) && equal(prem(0).succedent, c.succedent->left) &&
         equal(prem(1).antecedent, c.antecedent->right) && equal(prem(1).succedent, c.succedent->right);
  } else if (r == "or-right-1" || r == "or-right-2") {
    bool first = r == "or-right-1";
    ok = n == 1 && c.succedent->kind == FKind::Or && equal(prem(0).antecedent, c.antecedent) &&
         equal(prem(0).succedent, first ? c.succedent->left : c.succedent->right);
  } else if (r == "imp-left") {
    if (n == 2 && equal(prem(1).succedent, c.succedent)) {
      for (const Path& p : positions(c.antecedent)) {
        StructurePtr sub = get_sub(c.antecedent, p);
        if (sub->kind != SKind::SProd || !leaf_kind(sub->right, FKind::Imp)) continue;
        const FormulaPtr& f = sub->right->formula;
        if (equal(sub->left, prem(0).antecedent) && equal(prem(0).succedent, f->left) &&
            equal(replace_sub(c.antecedent, p, s_leaf(f->right)), prem(1).antecedent)) {
          ok = true;
          break;
        }
      }
    }
  } else if (r == "coimp-left") {
    if (n == 2 && equal(prem(0).succedent, c.succedent)) {
      for (const Path& p : positions(c.antecedent)) {
        StructurePtr sub = get_sub(c.antecedent, p);
        if (sub->kind != SKind::SProd || !leaf_kind(sub->left, FKind::Coimp)) continue;
        const FormulaPtr& f = sub->left->formula;
        if (equal(sub->right, prem(1).antecedent) && equal(prem(1).succedent, f->right) &&
            equal(replace_sub(c.antecedent, p, s_leaf(f->left)), prem(0).antecedent)) {
          ok = true;
          break;
        }
      }
    }
  } else if (r == "meet-contract") {
    ok = n == 1 && equal(prem(0).succedent, c.succedent) &&
         single_rewrite(c.antecedent, prem(0).antecedent, [](const StructurePtr&) { return true; },
                        [](const StructurePtr& s) { return s_meet(s, s); });
  } else if (r == "meet-weaken") {
    ok = n == 1 && equal(prem(0).succedent, c.succedent) &&
         single_rewrite(c.antecedent, prem(0).antecedent,
                        [](const StructurePtr& s) { return s->kind == SKind::SMeet; },
                        [](const StructurePtr& s) { return s->right; });
  } else if (r == "meet-exchange") {
    ok = n == 1 && equal(prem(0).succedent, c.succedent) &&
         single_rewrite(c.antecedent, prem(0).antecedent,
                        [](const StructurePtr& s) { return s->kind == SKind::SMeet; },
                        [](const StructurePtr& s) { return s_meet(s->right, s->left); });
  } else if (r == "meet-assoc") {
    ok = n == 1 && equal(prem(0).succedent, c.succedent) &&
         single_rewrite(c.antecedent, prem(0).antecedent,
                        [](const StructurePtr& s) {
                          return s->kind == SKind::SMeet && s->right->kind == SKind::SMeet;
                        },
                        [](const StructurePtr& s) {
                          return s_meet(s_meet(s->left, s->right->left), s->right->right);
                        });
  } else if (r == "mix") {
    if (rules.mix_enabled && n == 2 && equal(prem(1).succedent, c.succedent)) {
      const FormulaPtr& phi = prem(0).succedent;
      ok = mix_replacement(prem(1).antecedent, c.antecedent, phi, prem(0).antecedent);
    }
  } else {
    // synthesized structural rule
    const StructuralRule* rule = nullptr;
    for (const auto& sr : rules.rules)
      if (sr.name == r) rule = &sr;
    if (!rule) return fail("unknown rule");
    if (n == 1 && equal(prem(0).succedent, c.succedent)) {
      for (const Path& p : positions(c.antecedent)) {
        std::map<std::string, StructurePtr> binding;
        if (!match_pattern(rule->conclusion_pattern(), get_sub(c.antecedent, p), binding)) continue;
        std::map<std::string, StructurePtr> full = binding;
        StructurePtr prem_sub = get_sub(prem(0).antecedent, p);
        if (!match_pattern(rule->premise_pattern(), prem_sub, full)) continue;
        // bindings shared between the two sides must agree; replacing the
        // subtree must reproduce the premise exactly
        if (equal(replace_sub(c.antecedent, p, prem_sub), prem(0).antecedent)) {
          ok = true;
          break;
        }
      }
    }
  }
  if (!ok) return fail("illegal rule instance");
  for (const auto& sub : d.premises)
    if (!check_proof(sub, rules, why)) return false;
  return true;
}

std::optional<DerivationTree> prove_with_mix(const ConsecutionSequent& left, const StructurePtr& right_shape,
                                             const FormulaPtr& succedent, const RuleSet& rules,
                                             ProofLimits limits) {
  if (!rules.mix_enabled) throw std::invalid_argument("mix rule is not enabled in this rule set");
  ConsecutionSequent right{fill_holes(right_shape, s_leaf(left.succedent)), succedent};
  auto left_proof = prove(left, rules, limits);
  if (!left_proof) return std::nullopt;
  auto right_proof = prove(right, rules, limits);
  if (!right_proof) return std::nullopt;
  ConsecutionSequent mixed{fill_holes(right_shape, left.antecedent), succedent};
  return DerivationTree{mixed, "mix", {std::move(*left_proof), std::move(*right_proof)}};
}

int derivation_height(const DerivationTree& d) {
  int h = 0;
  for (const auto& p : d.premises) h = std::max(h, derivation_height(p));
  return h + 1;
}

int derivation_nodes(const DerivationTree& d) {
  int n = 1;
  for (const auto& p : d.premises) n += derivation_nodes(p);
  return n;
}

namespace {

void subformulas(const FormulaPtr& f, std::set<std::string>& out) {
  out.insert(print(f));
  if (f->is_atom()) return;
  subformulas(f->left, out);
  subformulas(f->right, out);
}

void leaf_formulas(const StructurePtr& s, std::vector<FormulaPtr>& out) {
  if (s->kind == SKind::Leaf) {
    out.push_back(s->formula);
    return;
  }
  if (s->kind == SKind::Hole) return;
  leaf_formulas(s->left, out);
  leaf_formulas(s->right, out);
}

bool check_subformulas(const DerivationTree& d, const std::set<std::string>& allowed) {
  std::vector<FormulaPtr> leaves;
  leaf_formulas(d.conclusion.antecedent, leaves);
  leaves.push_back(d.conclusion.succedent);
  for (const auto& f : leaves)
    if (!allowed.count(print(f))) return false;
  for (const auto& p : d.premises)
    if (!check_subformulas(p, allowed)) return false;
  return true;
}

}  // namespace

bool subformula_property(const DerivationTree& d) {
  std::set<std::string> allowed;
  std::vector<FormulaPtr> leaves;
  leaf_formulas(d.conclusion.antecedent, leaves);
  leaves.push_back(d.conclusion.succedent);
  for (const auto& f : leaves) subformulas(f, allowed);
  return check_subformulas(d, allowed);
}

}  // namespace wb
