#include "wb/alc.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace wb {

namespace {

void note_names(std::set<std::string>& used, const FormulaPtr& f) {
  for (const auto& v : prop_vars(f)) used.insert(v);
}

}  // namespace

AlcState AlcState::initial(const Inequality& goal) {
  if (!in_lang(goal.lhs, Lang::LC) || !in_lang(goal.rhs, Lang::LC))
    throw AlcError("supersequents carry lc formulas only: " + print(goal));
  AlcState st;
  st.goal = goal;
  note_names(st.used_names, goal.lhs);
  note_names(st.used_names, goal.rhs);
  return st;
}

bool equal(const AlcState& a, const AlcState& b) {
  if (a.assumptions.size() != b.assumptions.size()) return false;
  for (size_t i = 0; i < a.assumptions.size(); ++i)
    if (!equal(a.assumptions[i], b.assumptions[i])) return false;
  return equal(a.goal, b.goal);
}

std::string print(const AlcState& s) {
  std::string out;
  for (size_t i = 0; i < s.assumptions.size(); ++i) {
    if (i) out += " ; ";
    out += print(s.assumptions[i]);
  }
  out += " => ";
  out += print(s.goal);
  return out;
}

namespace {

struct Shapes {
  static Inequality need(const AlcState& st, int operand) {
    if (operand < 0 || operand >= static_cast<int>(st.assumptions.size()))
      throw AlcError("assumption index out of range");
    return st.assumptions[operand];
  }
};

void replace_assumption(AlcState& st, int k, std::vector<Inequality> repl) {
  st.assumptions.erase(st.assumptions.begin() + k);
  st.assumptions.insert(st.assumptions.begin() + k, repl.begin(), repl.end());
}

std::string claim_fresh(AlcState& st, const std::string& arg, const char* rule) {
  if (arg.empty()) throw AlcError(std::string(rule) + " needs a fresh variable argument");
  if (st.used_names.count(arg)) throw AlcError("variable " + arg + " is not fresh");
  st.used_names.insert(arg);
  return arg;
}

// Ackermann admission: the standard polarity conditions, plus the transfer
// case for a single bare-variable bound, which covers the substitutions the
// worked derivations perform on product terms.
struct AckCheck {
  bool rack;                 // rack: bounds alpha |- x, join; lack: x |- alpha, meet
  std::string var;
  FormulaPtr transfer_var;   // set when the only bound is a bare variable

  bool member_ok(const Inequality& s) const {
    bool lhs_ok = rack ? positive_in(s.lhs, var) : negative_in(s.lhs, var);
    bool rhs_ok = rack ? negative_in(s.rhs, var) : positive_in(s.rhs, var);
    if (lhs_ok && rhs_ok) return true;
    if (!transfer_var) return false;
    const std::string& v = transfer_var->name;
    return rack ? (negative_in(s.lhs, v) && positive_in(s.rhs, v))
                : (positive_in(s.lhs, v) && negative_in(s.rhs, v));
  }

  bool goal_ok(const Inequality& s) const {
    if (!occurs(s.lhs, var) && !occurs(s.rhs, var)) return true;
    bool lhs_ok = rack ? negative_in(s.lhs, var) : positive_in(s.lhs, var);
    bool rhs_ok = rack ? positive_in(s.rhs, var) : negative_in(s.rhs, var);
    if (lhs_ok && rhs_ok) return true;
    if (!transfer_var) return false;
    const std::string& v = transfer_var->name;
    return rack ? (positive_in(s.lhs, v) && negative_in(s.rhs, v))
                : (negative_in(s.lhs, v) && positive_in(s.rhs, v));
  }
};

void apply_ackermann(AlcState& st, const std::string& var, bool rack) {
  std::vector<size_t> bounds;
  for (size_t i = 0; i < st.assumptions.size(); ++i) {
    const Inequality& s = st.assumptions[i];
    const FormulaPtr& bound_side = rack ? s.rhs : s.lhs;
    const FormulaPtr& value_side = rack ? s.lhs : s.rhs;
    if (bound_side->kind == FKind::Var && bound_side->name == var && !occurs(value_side, var))
      bounds.push_back(i);
  }
  if (bounds.empty()) throw AlcError(std::string(rack ? "rack" : "lack") + ": no bound for " + var);

  AckCheck check{rack, var, nullptr};
  if (bounds.size() == 1) {
    const Inequality& b = st.assumptions[bounds[0]];
    const FormulaPtr& value_side = rack ? b.lhs : b.rhs;
    if (value_side->kind == FKind::Var) check.transfer_var = value_side;
  }

  FormulaPtr repl;
  for (size_t i : bounds) {
    FormulaPtr piece = rack ? st.assumptions[i].lhs : st.assumptions[i].rhs;
    repl = repl ? (rack ? f_or(repl, piece) : f_and(repl, piece)) : piece;
  }

  std::vector<Inequality> next;
  for (size_t i = 0; i < st.assumptions.size(); ++i) {
    if (std::find(bounds.begin(), bounds.end(), i) != bounds.end()) continue;
    const Inequality& s = st.assumptions[i];
    if (occurs(s.lhs, var) || occurs(s.rhs, var)) {
      if (!check.member_ok(s))
        throw AlcError(std::string(rack ? "rack" : "lack") + ": polarity violation in " + print(s));
      next.push_back(substitute(s, {{var, repl}}));
    } else {
      next.push_back(s);
    }
  }
  if (occurs(st.goal.lhs, var) || occurs(st.goal.rhs, var)) {
    if (!check.goal_ok(st.goal))
      throw AlcError(std::string(rack ? "rack" : "lack") + ": goal polarity violation");
    st.goal = substitute(st.goal, {{var, repl}});
  }
  st.assumptions = std::move(next);
}

}  // namespace

AlcState alc_apply(const AlcState& state, const AlcStep& step) {
  AlcState st = state;
  const std::string& r = step.rule;

  if (r == "rack" || r == "lack") {
    if (step.up) throw AlcError("ackermann rules are replayed downward only");
    if (step.arg.empty()) throw AlcError(r + " needs a variable argument");
    apply_ackermann(st, step.arg, r == "rack");
    return st;
  }

  if (r == "ap1" || r == "ap2") {
    if (!step.up) {
      std::string p = claim_fresh(st, step.arg, r.c_str());
      if (r == "ap1") {
        st.assumptions.push_back({f_var(p), st.goal.lhs});
        st.goal = {f_var(p), st.goal.rhs};
      } else {
        st.assumptions.push_back({st.goal.rhs, f_var(p)});
        st.goal = {st.goal.lhs, f_var(p)};
      }
      return st;
    }
    // upward: drop the approximation assumption and restore the goal side
    Inequality s = Shapes::need(st, step.operand);
    if (r == "ap1") {
      if (s.lhs->kind != FKind::Var || !equal(s.lhs, st.goal.lhs))
        throw AlcError("ap1^ expects the goal lefthand side to be the approximated variable");
      const std::string& p = s.lhs->name;
      for (size_t i = 0; i < st.assumptions.size(); ++i)
        if (static_cast<int>(i) != step.operand &&
            (occurs(st.assumptions[i].lhs, p) || occurs(st.assumptions[i].rhs, p)))
          throw AlcError("ap1^: " + p + " occurs outside the approximation");
      if (occurs(st.goal.rhs, p)) throw AlcError("ap1^: " + p + " occurs in the goal righthand side");
      st.goal = {s.rhs, st.goal.rhs};
    } else {
      if (s.rhs->kind != FKind::Var || !equal(s.rhs, st.goal.rhs))
        throw AlcError("ap2^ expects the goal righthand side to be the approximated variable");
      const std::string& p = s.rhs->name;
      for (size_t i = 0; i < st.assumptions.size(); ++i)
        if (static_cast<int>(i) != step.operand &&
            (occurs(st.assumptions[i].lhs, p) || occurs(st.assumptions[i].rhs, p)))
          throw AlcError("ap2^: " + p + " occurs outside the approximation");
      if (occurs(st.goal.lhs, p)) throw AlcError("ap2^: " + p + " occurs in the goal lefthand side");
      st.goal = {st.goal.lhs, s.lhs};
    }
    st.assumptions.erase(st.assumptions.begin() + step.operand);
    return st;
  }

  if (r == "rr1" || r == "rr2") {
    if (!step.up) {
      if (r == "rr1") {
        if (st.goal.rhs->kind != FKind::Imp) throw AlcError("rr1 expects goal x |- a -> b");
        st.goal = {f_prod(st.goal.rhs->left, st.goal.lhs), st.goal.rhs->right};
      } else {
        if (st.goal.rhs->kind != FKind::Coimp) throw AlcError("rr2 expects goal x |- a <- b");
        st.goal = {f_prod(st.goal.lhs, st.goal.rhs->right), st.goal.rhs->left};
      }
    } else {
      if (st.goal.lhs->kind != FKind::Prod) throw AlcError(r + "^ expects goal a * b |- x");
      if (r == "rr1")
        st.goal = {st.goal.lhs->right, f_imp(st.goal.lhs->left, st.goal.rhs)};
      else
        st.goal = {st.goal.lhs->left, f_coimp(st.goal.rhs, st.goal.lhs->right)};
    }
    return st;
  }

  Inequality s = Shapes::need(st, step.operand);
  int k = step.operand;

  if (r == "rl1" || r == "rl2") {
    if (!step.up) {
      if (r == "rl1") {
        if (s.rhs->kind != FKind::Imp) throw AlcError("rl1 expects assumption x |- a -> b");
        replace_assumption(st, k, {{f_prod(s.rhs->left, s.lhs), s.rhs->right}});
      } else {
        if (s.rhs->kind != FKind::Coimp) throw AlcError("rl2 expects assumption x |- a <- b");
        replace_assumption(st, k, {{f_prod(s.lhs, s.rhs->right), s.rhs->left}});
      }
    } else {
      if (s.lhs->kind != FKind::Prod) throw AlcError(r + "^ expects assumption a * b |- x");
      if (r == "rl1")
        replace_assumption(st, k, {{s.lhs->right, f_imp(s.lhs->left, s.rhs)}});
      else
        replace_assumption(st, k, {{s.lhs->left, f_coimp(s.rhs, s.lhs->right)}});
    }
    return st;
  }

  if (step.up) throw AlcError(r + ": upward replay is not supported");

  if (r == "ands") {
    if (s.rhs->kind != FKind::And) throw AlcError("ands expects assumption x |- a & b");
    replace_assumption(st, k, {{s.lhs, s.rhs->left}, {s.lhs, s.rhs->right}});
    return st;
  }
  if (r == "ors") {
    if (s.lhs->kind != FKind::Or) throw AlcError("ors expects assumption a | b |- x");
    replace_assumption(st, k, {{s.lhs->left, s.rhs}, {s.lhs->right, s.rhs}});
    return st;
  }

  // binary approximation rules on an assumption
  auto fresh_var = [&](const char* rule) { return f_var(claim_fresh(st, step.arg, rule)); };
  if (r == "impap1") {
    if (s.lhs->kind != FKind::Imp) throw AlcError("impap1 expects assumption a -> b |- x");
    FormulaPtr p = fresh_var("impap1");
    replace_assumption(st, k, {{p, s.lhs->left}, {f_imp(p, s.lhs->right), s.rhs}});
    return st;
  }
  if (r == "impap2") {
    if (s.lhs->kind != FKind::Imp) throw AlcError("impap2 expects assumption a -> b |- x");
    FormulaPtr p = fresh_var("impap2");
    replace_assumption(st, k, {{s.lhs->right, p}, {f_imp(s.lhs->left, p), s.rhs}});
    return st;
  }
  if (r == "impap3") {
    if (s.rhs->kind != FKind::Imp) throw AlcError("impap3 expects assumption x |- a -> b");
    FormulaPtr p = fresh_var("impap3");
    replace_assumption(st, k, {{s.rhs->left, p}, {s.lhs, f_imp(p, s.rhs->right)}});
    return st;
  }
  if (r == "impap4") {
    if (s.rhs->kind != FKind::Imp) throw AlcError("impap4 expects assumption x |- a -> b");
    FormulaPtr p = fresh_var("impap4");
    replace_assumption(st, k, {{p, s.rhs->right}, {s.lhs, f_imp(s.rhs->left, p)}});
    return st;
  }
  if (r == "prodap1") {
    if (s.rhs->kind != FKind::Prod) throw AlcError("prodap1 expects assumption x |- a * b");
    FormulaPtr p = fresh_var("prodap1");
    replace_assumption(st, k, {{p, s.rhs->left}, {s.lhs, f_prod(p, s.rhs->right)}});
    return st;
  }
  if (r == "prodap2") {
    if (s.rhs->kind != FKind::Prod) throw AlcError("prodap2 expects assumption x |- a * b");
    FormulaPtr p = fresh_var("prodap2");
    replace_assumption(st, k, {{p, s.rhs->right}, {s.lhs, f_prod(s.rhs->left, p)}});
    return st;
  }
  if (r == "prodap3") {
    if (s.lhs->kind != FKind::Prod) throw AlcError("prodap3 expects assumption a * b |- x");
    FormulaPtr p = fresh_var("prodap3");
    replace_assumption(st, k, {{s.lhs->left, p}, {f_prod(p, s.lhs->right), s.rhs}});
    return st;
  }
  if (r == "prodap4") {
    if (s.lhs->kind != FKind::Prod) throw AlcError("prodap4 expects assumption a * b |- x");
    FormulaPtr p = fresh_var("prodap4");
    replace_assumption(st, k, {{s.lhs->right, p}, {f_prod(s.lhs->left, p), s.rhs}});
    return st;
  }
  if (r == "andap5") {
    if (s.lhs->kind != FKind::And) throw AlcError("andap5 expects assumption a & b |- x");
    FormulaPtr p = fresh_var("andap5");
    replace_assumption(st, k, {{s.lhs->left, p}, {f_and(p, s.lhs->right), s.rhs}});
    return st;
  }
  if (r == "andap6") {
    if (s.lhs->kind != FKind::And) throw AlcError("andap6 expects assumption a & b |- x");
    FormulaPtr p = fresh_var("andap6");
    replace_assumption(st, k, {{s.lhs->right, p}, {f_and(s.lhs->left, p), s.rhs}});
    return st;
  }
  if (r == "orap1") {
    if (s.rhs->kind != FKind::Or) throw AlcError("orap1 expects assumption x |- a | b");
    FormulaPtr p = fresh_var("orap1");
    replace_assumption(st, k, {{p, s.rhs->left}, {s.lhs, f_or(p, s.rhs->right)}});
    return st;
  }
  if (r == "orap2") {
    if (s.rhs->kind != FKind::Or) throw AlcError("orap2 expects assumption x |- a | b");
    FormulaPtr p = fresh_var("orap2");
    replace_assumption(st, k, {{p, s.rhs->right}, {s.lhs, f_or(s.rhs->left, p)}});
    return st;
  }
  throw AlcError("unknown rule: " + r);
}

bool check_derivation(const AlcDerivation& d, std::string* why) {
  if (d.states.empty() || !equal(d.states.front(), AlcState::initial(d.input))) {
    if (why) *why = "derivation does not start from the input supersequent";
    return false;
  }
  for (size_t i = 0; i < d.steps.size(); ++i) {
    AlcState next;
    try {
      next = alc_apply(d.states[i], d.steps[i]);
    } catch (const AlcError& e) {
      if (why) *why = "step " + std::to_string(i + 1) + " (" + d.steps[i].rule + "): " + e.what();
      return false;
    }
    if (i + 1 >= d.states.size() || !equal(next, d.states[i + 1])) {
      if (why) *why = "step " + std::to_string(i + 1) + " does not yield the recorded state";
      return false;
    }
  }
  return true;
}

namespace {

AlcStep parse_rule_line(const std::string& line) {
  std::istringstream in(line);
  std::string kw, name, operand, arg;
  in >> kw >> name >> operand;
  in >> arg;
  AlcStep step;
  if (!name.empty() && name.back() == '^') {
    step.up = true;
    name.pop_back();
  }
  step.rule = name;
  if (operand == "goal" || operand.empty()) {
    step.operand = -1;
  } else if (std::isdigit(static_cast<unsigned char>(operand[0]))) {
    step.operand = std::stoi(operand);
  } else {
    // ackermann rules name the eliminated variable in the operand slot
    step.operand = -1;
    step.arg = operand;
    return step;
  }
  step.arg = arg;
  return step;
}

}  // namespace

AlcDerivation parse_script(const std::string& text) {
  AlcDerivation d;
  std::istringstream in(text);
  std::string line;
  bool have_input = false;
  std::vector<AlcStep> steps;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream probe(line);
    std::string kw;
    if (!(probe >> kw)) continue;
    if (kw == "INPUT") {
      d.input = parse_inequality(line.substr(line.find("INPUT") + 5), Lang::LC);
      have_input = true;
    } else if (kw == "RULE") {
      steps.push_back(parse_rule_line(line));
    } else {
      throw AlcError("bad script line: " + line);
    }
  }
  if (!have_input) throw AlcError("script has no INPUT line");
  d.steps = std::move(steps);
  return d;
}

AlcDerivation replay_script(const std::string& text) {
  AlcDerivation d = parse_script(text);
  d.states.push_back(AlcState::initial(d.input));
  for (const auto& step : d.steps) d.states.push_back(alc_apply(d.states.back(), step));
  return d;
}

namespace {

class Search {
 public:
  explicit Search(const Inequality& input) : input_(input) {
    deriv_.input = input;
    deriv_.states.push_back(AlcState::initial(input));
  }

  const AlcState& state() const { return deriv_.states.back(); }

  void apply(AlcStep step) {
    deriv_.states.push_back(alc_apply(state(), step));
    deriv_.steps.push_back(std::move(step));
  }

  std::string fresh_name() {
    static const char* pool[] = {"s", "t", "u", "v", "w"};
    for (const char* c : pool)
      if (!state().used_names.count(c)) return c;
    for (int i = 0;; ++i) {
      std::string n = "x" + std::to_string(i);
      if (!state().used_names.count(n)) return n;
    }
  }

  bool done() const {
    const AlcState& st = state();
    return st.assumptions.empty() && in_lang(st.goal.lhs, Lang::Prod) && in_lang(st.goal.rhs, Lang::Prod);
  }

  // Splits conjunctions and residuates implications in the assumptions.
  void saturate() {
    for (;;) {
      bool moved = false;
      for (size_t i = 0; i < state().assumptions.size(); ++i) {
        const Inequality a = state().assumptions[i];
        if (a.rhs->kind == FKind::And) apply({"ands", int(i)});
        else if (a.lhs->kind == FKind::Or) apply({"ors", int(i)});
        else if (a.rhs->kind == FKind::Imp) apply({"rl1", int(i)});
        else if (a.rhs->kind == FKind::Coimp) apply({"rl2", int(i)});
        else continue;
        moved = true;
        break;
      }
      if (!moved) return;
    }
  }

  void strip_goal() {
    for (;;) {
      if (state().goal.rhs->kind == FKind::Imp) apply({"rr1", -1});
      else if (state().goal.rhs->kind == FKind::Coimp) apply({"rr2", -1});
      else return;
    }
  }

  bool eliminate_some() {
    std::set<std::string> vars;
    for (const auto& a : state().assumptions)
      for (const auto& v : prop_vars(a)) vars.insert(v);
    for (const auto& v : vars) {
      for (const char* rule : {"rack", "lack"}) {
        try {
          apply({rule, -1, v});
          return true;
        } catch (const AlcError&) {
        }
      }
    }
    return false;
  }

  // Exposes an implication buried in the goal lefthand side: peel the product
  // spine, approximate, residuate the exposed assumption, and rebuild.
  bool peel_goal() {
    if (in_lang(state().goal.lhs, Lang::Prod)) return false;
    while (state().goal.lhs->kind == FKind::Prod) {
      const FormulaPtr l = state().goal.lhs;
      if (!in_lang(l->left, Lang::Prod))
        apply({"rr2", -1, "", true});
      else
        apply({"rr1", -1, "", true});
    }
    if (state().goal.lhs->kind != FKind::Imp && state().goal.lhs->kind != FKind::Coimp) return false;
    apply({"ap1", -1, fresh_name()});
    int k = int(state().assumptions.size()) - 1;
    if (state().assumptions[k].rhs->kind == FKind::Imp)
      apply({"rl1", k});
    else
      apply({"rl2", k});
    strip_goal();
    return true;
  }

  std::optional<AlcDerivation> playbook() {
    try {
      if (done()) return deriv_;
      apply({"ap1", -1, fresh_name()});
      for (int round = 0; round < 16; ++round) {
        saturate();
        strip_goal();
        if (done()) return deriv_;
        if (eliminate_some()) continue;
        if (!peel_goal()) return std::nullopt;
      }
    } catch (const AlcError&) {
    }
    return std::nullopt;
  }

 private:
  Inequality input_;
  AlcDerivation deriv_;
};

// Bounded iterative-deepening fallback over all rule applications. A node
// budget keeps stalled searches (the inputs conjectured to have no
// correspondent) from running away.
class Iddfs {
 public:
  Iddfs(const Inequality& input, int max_depth, long node_budget = 200000)
      : input_(input), max_depth_(max_depth), nodes_left_(node_budget) {}

  std::optional<AlcDerivation> run() {
    for (int depth = 1; depth <= max_depth_ && nodes_left_ > 0; ++depth) {
      AlcDerivation d;
      d.input = input_;
      d.states.push_back(AlcState::initial(input_));
      seen_.clear();
      if (extend(d, depth)) return d;
    }
    return std::nullopt;
  }

 private:
  bool goal_reached(const AlcState& st) const {
    return st.assumptions.empty() && in_lang(st.goal.lhs, Lang::Prod) && in_lang(st.goal.rhs, Lang::Prod) &&
           !(in_lang(input_.lhs, Lang::Prod) && in_lang(input_.rhs, Lang::Prod));
  }

  bool extend(AlcDerivation& d, int depth) {
    // by value: growing d.states below would invalidate a reference
    const AlcState st = d.states.back();
    if (goal_reached(st)) return true;
    if (depth == 0 || --nodes_left_ <= 0) return false;
    std::string key = print(st) + "@" + std::to_string(depth);
    if (!seen_.insert(key).second) return false;

    std::vector<AlcStep> moves;
    std::string fresh = fresh_of(st);
    std::set<std::string> vars;
    for (const auto& a : st.assumptions)
      for (const auto& v : prop_vars(a)) vars.insert(v);
    for (const auto& v : vars) {
      moves.push_back({"rack", -1, v});
      moves.push_back({"lack", -1, v});
    }
    if (st.goal.rhs->kind == FKind::Imp) moves.push_back({"rr1", -1});
    if (st.goal.rhs->kind == FKind::Coimp) moves.push_back({"rr2", -1});
    if (st.goal.lhs->kind == FKind::Prod) {
      moves.push_back({"rr1", -1, "", true});
      moves.push_back({"rr2", -1, "", true});
    }
    for (size_t i = 0; i < st.assumptions.size(); ++i) {
      const Inequality& a = st.assumptions[i];
      if (a.rhs->kind == FKind::And) moves.push_back({"ands", int(i)});
      if (a.lhs->kind == FKind::Or) moves.push_back({"ors", int(i)});
      if (a.rhs->kind == FKind::Imp) moves.push_back({"rl1", int(i)});
      if (a.rhs->kind == FKind::Coimp) moves.push_back({"rl2", int(i)});
      if (a.lhs->kind == FKind::Imp) {
        moves.push_back({"impap1", int(i), fresh});
        moves.push_back({"impap2", int(i), fresh});
      }
      if (a.rhs->kind == FKind::Imp) {
        moves.push_back({"impap3", int(i), fresh});
        moves.push_back({"impap4", int(i), fresh});
      }
      if (a.lhs->kind == FKind::Prod) {
        moves.push_back({"prodap3", int(i), fresh});
        moves.push_back({"prodap4", int(i), fresh});
      }
      if (a.rhs->kind == FKind::Prod) {
        moves.push_back({"prodap1", int(i), fresh});
        moves.push_back({"prodap2", int(i), fresh});
      }
      if (a.lhs->kind == FKind::And) {
        moves.push_back({"andap5", int(i), fresh});
        moves.push_back({"andap6", int(i), fresh});
      }
      if (a.rhs->kind == FKind::Or) {
        moves.push_back({"orap1", int(i), fresh});
        moves.push_back({"orap2", int(i), fresh});
      }
    }
    moves.push_back({"ap1", -1, fresh});
    moves.push_back({"ap2", -1, fresh});

    for (const auto& m : moves) {
      AlcState next;
      try {
        next = alc_apply(st, m);
      } catch (const AlcError&) {
        continue;
      }
      d.states.push_back(next);
      d.steps.push_back(m);
      if (extend(d, depth - 1)) return true;
      d.states.pop_back();
      d.steps.pop_back();
    }
    return false;
  }

  static std::string fresh_of(const AlcState& st) {
    for (const char* c : {"s", "t", "u", "v", "w"})
      if (!st.used_names.count(c)) return c;
    for (int i = 0;; ++i) {
      std::string n = "x" + std::to_string(i);
      if (!st.used_names.count(n)) return n;
    }
  }

  Inequality input_;
  int max_depth_;
  long nodes_left_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

std::optional<AlcDerivation> run_alc(const Inequality& ineq, int max_depth) {
  if (!in_lang(ineq.lhs, Lang::LC) || !in_lang(ineq.rhs, Lang::LC))
    throw AlcError("run_alc expects an lc sequent");
  if (in_lang(ineq.lhs, Lang::SI) && in_lang(ineq.rhs, Lang::SI)) {
    Search search(ineq);
    if (auto d = search.playbook()) return d;
  }
  return Iddfs(ineq, max_depth).run();
}

}  // namespace wb
