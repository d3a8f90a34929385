#include "wb/alba.hpp"

#include <algorithm>

#include "wb/canonical.hpp"

namespace wb {

namespace {

bool pure(const FormulaPtr& f) { return prop_vars(f).empty(); }

bool trivially_true(const Inequality& s) {
  return s.lhs->kind == FKind::Bot || s.rhs->kind == FKind::Top;
}

// --- stage 1 -----------------------------------------------------------

// Distributes conjunctions over disjunctions (positive side) or disjunctions
// over conjunctions (negative side) in the lattice skeleton above any
// implication.
FormulaPtr distribute(const FormulaPtr& f, bool positive) {
  if (f->is_atom() || f->kind == FKind::Imp) return f;
  FormulaPtr l = distribute(f->left, positive);
  FormulaPtr r = distribute(f->right, positive);
  if (positive && f->kind == FKind::And) {
    if (l->kind == FKind::Or)
      return distribute(f_or(f_and(l->left, r), f_and(l->right, r)), positive);
    if (r->kind == FKind::Or)
      return distribute(f_or(f_and(l, r->left), f_and(l, r->right)), positive);
    return f_and(l, r);
  }
  if (!positive && f->kind == FKind::Or) {
    if (l->kind == FKind::And)
      return distribute(f_and(f_or(l->left, r), f_or(l->right, r)), positive);
    if (r->kind == FKind::And)
      return distribute(f_and(f_or(l, r->left), f_or(l, r->right)), positive);
    return f_or(l, r);
  }
  return f->kind == FKind::And ? f_and(l, r) : f_or(l, r);
}

void split_rec(const Inequality& s, std::vector<Inequality>& out) {
  if (s.lhs->kind == FKind::Or) {
    split_rec({s.lhs->left, s.rhs}, out);
    split_rec({s.lhs->right, s.rhs}, out);
    return;
  }
  if (s.rhs->kind == FKind::And) {
    split_rec({s.lhs, s.rhs->left}, out);
    split_rec({s.lhs, s.rhs->right}, out);
    return;
  }
  out.push_back(s);
}

Inequality eliminate_variables(Inequality s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : prop_vars(s)) {
      Polarity pl = polarity(s.lhs, v);
      Polarity pr = polarity(s.rhs, v);
      if (pl == Polarity::Absent || pr == Polarity::Absent) continue;  // one-sided: keep
      if (pl == Polarity::Negative && pr == Polarity::Positive) {
        s = substitute(s, {{v, f_bot()}});
        changed = true;
        break;
      }
      if (pl == Polarity::Positive && pr == Polarity::Negative) {
        s = substitute(s, {{v, f_top()}});
        changed = true;
        break;
      }
    }
  }
  return s;
}

// --- fresh names -------------------------------------------------------

bool name_taken(const AlbaState& st, const std::string& n) {
  return std::find(st.forbidden.begin(), st.forbidden.end(), n) != st.forbidden.end();
}

std::string fresh_nom(AlbaState& st) {
  for (;;) {
    std::string n = "i" + std::to_string(st.fresh_noms++);
    if (!name_taken(st, n)) {
      st.forbidden.push_back(n);
      return n;
    }
  }
}

std::string fresh_conom(AlbaState& st) {
  for (;;) {
    std::string n = "m" + std::to_string(st.fresh_conoms++);
    if (!name_taken(st, n)) {
      st.forbidden.push_back(n);
      return n;
    }
  }
}

void record(AlbaState& st, const std::string& rule, const std::string& detail) {
  st.trace.push_back({rule, detail, st.inequalities, st.goal});
}

// --- Ackermann ---------------------------------------------------------

struct AckPlan {
  std::vector<size_t> bounds;  // indices of the bound inequalities
  FormulaPtr replacement;      // join (rar) or meet (lar) of the bounds
};

// rar: bounds are alpha <= v; every other occurrence must be positive on the
// left and negative on the right. lar is the mirror image.
std::optional<AckPlan> ack_plan(const AlbaState& st, const std::string& v, bool rar) {
  AckPlan plan;
  for (size_t i = 0; i < st.inequalities.size(); ++i) {
    const Inequality& s = st.inequalities[i];
    const FormulaPtr& bound_side = rar ? s.rhs : s.lhs;
    const FormulaPtr& other_side = rar ? s.lhs : s.rhs;
    if (bound_side->kind == FKind::Var && bound_side->name == v && !occurs(other_side, v)) {
      plan.bounds.push_back(i);
      continue;
    }
    bool lhs_ok = rar ? positive_in(s.lhs, v) : negative_in(s.lhs, v);
    bool rhs_ok = rar ? negative_in(s.rhs, v) : positive_in(s.rhs, v);
    if (!lhs_ok || !rhs_ok) return std::nullopt;
  }
  if (occurs(st.goal.lhs, v) || occurs(st.goal.rhs, v)) return std::nullopt;  // goal is always pure here
  FormulaPtr acc;
  for (size_t i : plan.bounds) {
    const Inequality& s = st.inequalities[i];
    FormulaPtr piece = rar ? s.lhs : s.rhs;
    acc = acc ? (rar ? f_or(acc, piece) : f_and(acc, piece)) : piece;
  }
  plan.replacement = acc ? acc : (rar ? f_bot() : f_top());
  return plan;
}

void apply_ack(AlbaState& st, const std::string& v, const AckPlan& plan) {
  std::vector<Inequality> next;
  std::map<std::string, FormulaPtr> binding{{v, plan.replacement}};
  for (size_t i = 0; i < st.inequalities.size(); ++i) {
    if (std::find(plan.bounds.begin(), plan.bounds.end(), i) != plan.bounds.end()) continue;
    Inequality s = substitute(st.inequalities[i], binding);
    if (!trivially_true(s)) next.push_back(s);
  }
  st.inequalities = std::move(next);
}

// --- saturation (splitting, residuation, approximation) -----------------

bool saturate_once(AlbaState& st) {
  for (size_t i = 0; i < st.inequalities.size(); ++i) {
    const Inequality s = st.inequalities[i];
    if (trivially_true(s)) {
      st.inequalities.erase(st.inequalities.begin() + i);
      record(st, "drop", print(s));
      return true;
    }
    if (s.rhs->kind == FKind::And) {
      st.inequalities[i] = {s.lhs, s.rhs->left};
      st.inequalities.insert(st.inequalities.begin() + i + 1, {s.lhs, s.rhs->right});
      record(st, "split-meet", print(s));
      return true;
    }
    if (s.lhs->kind == FKind::Or) {
      st.inequalities[i] = {s.lhs->left, s.rhs};
      st.inequalities.insert(st.inequalities.begin() + i + 1, {s.lhs->right, s.rhs});
      record(st, "split-join", print(s));
      return true;
    }
    if (s.rhs->kind == FKind::Imp && !pure(s.rhs)) {
      st.inequalities[i] = {f_prod(s.rhs->left, s.lhs), s.rhs->right};
      record(st, "residuation", print(s));
      return true;
    }
    if (s.rhs->kind == FKind::Conom && s.lhs->kind == FKind::Imp && !pure(s.lhs)) {
      if (!pure(s.lhs->left)) {
        FormulaPtr j = f_nom(fresh_nom(st));
        st.inequalities[i] = {j, s.lhs->left};
        st.inequalities.insert(st.inequalities.begin() + i + 1, {f_imp(j, s.lhs->right), s.rhs});
        record(st, "approx-imp-left", print(s));
        return true;
      }
      FormulaPtr nn = f_conom(fresh_conom(st));
      st.inequalities[i] = {s.lhs->right, nn};
      st.inequalities.insert(st.inequalities.begin() + i + 1, {f_imp(s.lhs->left, nn), s.rhs});
      record(st, "approx-imp-right", print(s));
      return true;
    }
  }
  return false;
}

std::vector<std::string> state_vars(const AlbaState& st) {
  std::set<std::string> vs;
  for (const auto& s : st.inequalities)
    for (const auto& v : prop_vars(s)) vs.insert(v);
  return {vs.begin(), vs.end()};
}

}  // namespace

std::vector<Inequality> preprocess(const Inequality& ineq) {
  if (!in_lang(ineq.lhs, Lang::SI) || !in_lang(ineq.rhs, Lang::SI))
    throw AlbaError("input must be an si sequent: " + print(ineq));
  Inequality d{distribute(ineq.lhs, true), distribute(ineq.rhs, false)};
  std::vector<Inequality> split;
  split_rec(d, split);
  std::vector<Inequality> out;
  for (const auto& s : split) out.push_back(eliminate_variables(s));
  return out;
}

AlbaState first_approximation(const Inequality& ineq) {
  AlbaState st;
  for (const auto& v : prop_vars(ineq)) st.forbidden.push_back(v);
  FormulaPtr i0 = f_nom(fresh_nom(st));
  FormulaPtr m0 = f_conom(fresh_conom(st));
  st.goal = {i0, m0};
  st.inequalities.push_back({i0, ineq.lhs});
  st.inequalities.push_back({ineq.rhs, m0});
  record(st, "first-approximation", print(ineq));
  return st;
}

AlbaState apply_rule(const AlbaState& state, const std::string& rule, size_t operand, const std::string& arg) {
  AlbaState st = state;
  if (rule == "rar" || rule == "lar") {
    if (arg.empty()) throw AlbaError(rule + " needs a variable argument");
    auto plan = ack_plan(st, arg, rule == "rar");
    if (!plan) throw AlbaError(rule + " polarity conditions violated for " + arg);
    apply_ack(st, arg, *plan);
    record(st, rule, arg);
    return st;
  }
  if (operand >= st.inequalities.size()) throw AlbaError("operand index out of range");
  const Inequality s = st.inequalities[operand];
  auto replace_with = [&](std::vector<Inequality> repl) {
    st.inequalities.erase(st.inequalities.begin() + operand);
    st.inequalities.insert(st.inequalities.begin() + operand, repl.begin(), repl.end());
  };
  if (rule == "split-meet") {
    if (s.rhs->kind != FKind::And) throw AlbaError("split-meet expects x <= a & b: " + print(s));
    replace_with({{s.lhs, s.rhs->left}, {s.lhs, s.rhs->right}});
  } else if (rule == "split-join") {
    if (s.lhs->kind != FKind::Or) throw AlbaError("split-join expects a | b <= x: " + print(s));
    replace_with({{s.lhs->left, s.rhs}, {s.lhs->right, s.rhs}});
  } else if (rule == "residuation") {
    if (s.rhs->kind != FKind::Imp) throw AlbaError("residuation expects x <= a -> b: " + print(s));
    replace_with({{f_prod(s.rhs->left, s.lhs), s.rhs->right}});
  } else if (rule == "approx-imp-left") {
    if (s.rhs->kind != FKind::Conom || s.lhs->kind != FKind::Imp)
      throw AlbaError("approx-imp-left expects a -> b <= m: " + print(s));
    std::string n = arg.empty() ? fresh_nom(st) : arg;
    if (!arg.empty() && name_taken(st, n)) throw AlbaError("nominal " + n + " is not fresh");
    if (!arg.empty()) st.forbidden.push_back(n);
    replace_with({{f_nom(n), s.lhs->left}, {f_imp(f_nom(n), s.lhs->right), s.rhs}});
  } else if (rule == "approx-imp-right") {
    if (s.rhs->kind != FKind::Conom || s.lhs->kind != FKind::Imp)
      throw AlbaError("approx-imp-right expects a -> b <= m: " + print(s));
    std::string n = arg.empty() ? fresh_conom(st) : arg;
    if (!arg.empty() && name_taken(st, n)) throw AlbaError("conominal " + n + " is not fresh");
    if (!arg.empty()) st.forbidden.push_back(n);
    replace_with({{s.lhs->right, f_conom(n)}, {f_imp(s.lhs->left, f_conom(n)), s.rhs}});
  } else if (rule == "approx-prod-left") {
    if (s.lhs->kind != FKind::Nom || s.rhs->kind != FKind::Prod)
      throw AlbaError("approx-prod-left expects i <= a * b: " + print(s));
    std::string n = fresh_nom(st);
    replace_with({{f_nom(n), s.rhs->left}, {s.lhs, f_prod(f_nom(n), s.rhs->right)}});
  } else if (rule == "approx-prod-right") {
    if (s.lhs->kind != FKind::Nom || s.rhs->kind != FKind::Prod)
      throw AlbaError("approx-prod-right expects i <= a * b: " + print(s));
    std::string n = fresh_nom(st);
    replace_with({{f_nom(n), s.rhs->right}, {s.lhs, f_prod(s.rhs->left, f_nom(n))}});
  } else {
    throw AlbaError("unknown rule: " + rule);
  }
  record(st, rule, print(s));
  return st;
}

namespace {

// Elimination order: dependency-order rank first (when a certificate is
// available), then name order. The order type decides which Ackermann rule to
// try first.
struct ElimChoice {
  std::string var;
  bool prefer_rar;
};

std::vector<ElimChoice> elimination_order(const std::vector<std::string>& vars,
                                          const std::optional<InductiveCertificate>& cert) {
  std::vector<ElimChoice> out;
  std::vector<std::pair<int, std::string>> ranked;
  for (const auto& v : vars) {
    int rank = 0;
    if (cert)
      for (const auto& [a, b] : cert->omega)
        if (b == v && std::find(vars.begin(), vars.end(), a) != vars.end()) ++rank;
    ranked.push_back({rank, v});
  }
  std::sort(ranked.begin(), ranked.end());
  for (const auto& [rank, v] : ranked) {
    bool rar = true;
    if (cert) {
      auto it = cert->epsilon.find(v);
      if (it != cert->epsilon.end()) rar = it->second;
    }
    out.push_back({v, rar});
  }
  return out;
}

bool eliminate_one(AlbaState& st, const std::optional<InductiveCertificate>& cert) {
  std::vector<std::string> vars = state_vars(st);
  for (const auto& choice : elimination_order(vars, cert)) {
    for (bool rar : {choice.prefer_rar, !choice.prefer_rar}) {
      auto plan = ack_plan(st, choice.var, rar);
      if (plan) {
        apply_ack(st, choice.var, *plan);
        record(st, rar ? "rar" : "lar", choice.var);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

AlbaResult run_alba(const Inequality& ineq, std::optional<InductiveCertificate> cert, int max_steps) {
  AlbaResult res;
  if (!cert) cert = find_certificate(ineq);
  res.preprocessed = preprocess(ineq);
  for (const auto& pre : res.preprocessed) {
    AlbaState st = first_approximation(pre);
    int steps = 0;
    for (;;) {
      while (saturate_once(st)) {
        if (++steps > max_steps) break;
      }
      if (state_vars(st).empty()) break;
      if (steps > max_steps || !eliminate_one(st, cert)) {
        res.success = false;
        res.stuck = std::move(st);
        return res;
      }
      ++steps;
    }
    AlbaRun run;
    run.input = pre;
    run.trace = st.trace;
    run.raw.antecedent = st.inequalities;
    run.raw.consequent = st.goal;
    run.result = normalize_result(run.raw);
    res.runs.push_back(std::move(run));
  }
  res.success = true;
  return res;
}

namespace {

bool mentions(const Inequality& s, const std::string& name, FKind kind) {
  return occurs(s.lhs, name, kind) || occurs(s.rhs, name, kind);
}

int count_bounds(const std::vector<Inequality>& ante, const std::string& name, FKind kind, bool as_rhs,
                 size_t& where) {
  int count = 0;
  for (size_t i = 0; i < ante.size(); ++i) {
    const FormulaPtr& side = as_rhs ? ante[i].rhs : ante[i].lhs;
    if (side->kind == kind && side->name == name) {
      ++count;
      where = i;
    } else if (mentions(ante[i], name, kind)) {
      return -1;  // occurs somewhere other than as a plain bound
    }
  }
  return count;
}

}  // namespace

QuasiInequality normalize_result(const QuasiInequality& q) {
  if (!is_pure(q)) throw AlbaError("normalize_result expects a pure quasi-inequality");
  std::vector<Inequality> ante = q.antecedent;
  Inequality goal = q.consequent;
  for (;;) {
    ante.erase(std::remove_if(ante.begin(), ante.end(), [](const Inequality& s) { return trivially_true(s); }),
               ante.end());
    // discharge the unique bound t <= c of a conominal goal righthand side
    if (goal.rhs->kind == FKind::Conom && !occurs(goal.lhs, goal.rhs->name, FKind::Conom)) {
      size_t where = 0;
      int n = count_bounds(ante, goal.rhs->name, FKind::Conom, true, where);
      if (n == 1 && !occurs(ante[where].lhs, goal.rhs->name, FKind::Conom)) {
        goal = {goal.lhs, ante[where].lhs};
        ante.erase(ante.begin() + where);
        continue;
      }
    }
    if (goal.rhs->kind == FKind::Imp) {
      goal = {f_prod(goal.rhs->left, goal.lhs), goal.rhs->right};
      continue;
    }
    // discharge the unique bound i <= t of a nominal goal lefthand side
    if (goal.lhs->kind == FKind::Nom && !occurs(goal.rhs, goal.lhs->name, FKind::Nom)) {
      size_t where = 0;
      int n = count_bounds(ante, goal.lhs->name, FKind::Nom, false, where);
      if (n == 1 && !occurs(ante[where].rhs, goal.lhs->name, FKind::Nom)) {
        goal = {ante[where].rhs, goal.rhs};
        ante.erase(ante.begin() + where);
        continue;
      }
    }
    // goal atoms unconstrained by the antecedents range over all of the
    // (co)nominal domain and collapse to lattice bounds
    if (goal.lhs->kind == FKind::Nom && !occurs(goal.rhs, goal.lhs->name, FKind::Nom)) {
      bool elsewhere = false;
      for (const auto& a : ante) elsewhere = elsewhere || mentions(a, goal.lhs->name, FKind::Nom);
      if (!elsewhere) {
        goal = {f_top(), goal.rhs};
        continue;
      }
    }
    if (goal.rhs->kind == FKind::Conom && !occurs(goal.lhs, goal.rhs->name, FKind::Conom)) {
      bool elsewhere = false;
      for (const auto& a : ante) elsewhere = elsewhere || mentions(a, goal.rhs->name, FKind::Conom);
      if (!elsewhere) {
        goal = {goal.lhs, f_bot()};
        continue;
      }
    }
    break;
  }
  return canonical_names({ante, goal});
}

}  // namespace wb
