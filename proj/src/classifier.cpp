#include "wb/classifier.hpp"

#include <algorithm>

namespace wb {

SignedTree build_signed_tree(const FormulaPtr& f, bool positive) {
  if (!in_lang(f, Lang::SI)) throw LangError("signed trees are defined for si formulas: " + print(f));
  SignedTree t;
  t.node = f;
  t.positive = positive;
  switch (f->kind) {
    case FKind::Var:
    case FKind::Top:
    case FKind::Bot:
      t.nodeclass = NodeClass::AtomLeaf;
      break;
    case FKind::And:
    case FKind::Or:
      t.nodeclass = NodeClass::DeltaAdjoint;
      t.children.push_back(build_signed_tree(f->left, positive));
      t.children.push_back(build_signed_tree(f->right, positive));
      break;
    case FKind::Imp:
      t.nodeclass = positive ? NodeClass::SRR : NodeClass::SLR;
      t.children.push_back(build_signed_tree(f->left, !positive));
      t.children.push_back(build_signed_tree(f->right, positive));
      break;
    default:
      throw LangError("signed trees are defined for si formulas: " + print(f));
  }
  return t;
}

InductiveCertificate make_certificate(std::map<std::string, bool> epsilon,
                                      std::set<std::pair<std::string, std::string>> pairs) {
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& ab : pairs)
      for (const auto& bc : pairs)
        if (ab.second == bc.first && !pairs.count({ab.first, bc.second})) {
          pairs.insert({ab.first, bc.second});
          changed = true;
        }
  }
  for (const auto& ab : pairs)
    if (ab.first == ab.second)
      throw std::invalid_argument("dependency order must be irreflexive (cycle through " + ab.first + ")");
  return {std::move(epsilon), std::move(pairs)};
}

namespace {

struct PathNode {
  const SignedTree* tree;  // internal node on the branch
  int taken;               // which child the branch goes through
};

// Collects, for sign-annotated leaves of the subtree, (var, positive) pairs.
void signed_leaves(const SignedTree& t, std::vector<std::pair<std::string, bool>>& out) {
  if (t.children.empty()) {
    if (t.node->kind == FKind::Var) out.emplace_back(t.node->name, t.positive);
    return;
  }
  for (const auto& c : t.children) signed_leaves(c, out);
}

struct BranchAnalysis {
  bool epsilon_ok = true;                                 // goodness + side conditions on epsilon
  std::set<std::pair<std::string, std::string>> require;  // omega constraints (a below b)
  bool impossible = false;                                // a constraint of the form v below v
};

// Walks every branch of the signed tree; for each critical leaf checks
// goodness under epsilon and accumulates the dependency constraints its
// residual nodes impose.
void analyze(const SignedTree& t, std::vector<PathNode>& path, const std::map<std::string, bool>& eps,
             BranchAnalysis& res) {
  if (!res.epsilon_ok) return;
  if (t.children.empty()) {
    if (t.node->kind != FKind::Var) return;
    const std::string& v = t.node->name;
    auto it = eps.find(v);
    bool e1 = it == eps.end() ? true : it->second;
    bool critical = t.positive ? e1 : !e1;
    if (!critical) return;

    // path[0] is the root, path.back() the leaf's parent. The inner segment
    // is a leafward suffix; it must reach up to the outermost positive
    // implication, and no skeleton-only node (a negative implication) may
    // sit inside it.
    int first_pia = static_cast<int>(path.size());
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      const SignedTree* n = path[i].tree;
      if (n->node->kind == FKind::Imp && n->positive) {
        first_pia = i;
        break;
      }
    }
    for (int i = first_pia + 1; i < static_cast<int>(path.size()); ++i) {
      const SignedTree* n = path[i].tree;
      if (n->node->kind == FKind::Imp && !n->positive) {
        res.epsilon_ok = false;
        return;
      }
    }
    // Nodes pinned into the inner segment with a residual-only classification.
    for (int i = first_pia; i < static_cast<int>(path.size()); ++i) {
      const SignedTree* n = path[i].tree;
      bool srr = (n->node->kind == FKind::Imp && n->positive) ||
                 (n->node->kind == FKind::Or && n->positive) ||
                 (n->node->kind == FKind::And && !n->positive);
      if (!srr) continue;
      const SignedTree& side = n->children[1 - path[i].taken];
      std::vector<std::pair<std::string, bool>> leaves;
      signed_leaves(side, leaves);
      for (const auto& [u, pos] : leaves) {
        auto uit = eps.find(u);
        bool ue1 = uit == eps.end() ? true : uit->second;
        // side argument must agree with the dual order type
        if (pos ? ue1 : !ue1) {
          res.epsilon_ok = false;
          return;
        }
        if (u == v) {
          res.impossible = true;
          return;
        }
        res.require.insert({u, v});
      }
    }
    return;
  }
  for (size_t c = 0; c < t.children.size(); ++c) {
    path.push_back({&t, static_cast<int>(c)});
    analyze(t.children[c], path, eps, res);
    path.pop_back();
    if (!res.epsilon_ok || res.impossible) return;
  }
}

BranchAnalysis analyze_ineq(const Inequality& ineq, const std::map<std::string, bool>& eps) {
  BranchAnalysis res;
  SignedTree pos = build_signed_tree(ineq.lhs, true);
  SignedTree neg = build_signed_tree(ineq.rhs, false);
  std::vector<PathNode> path;
  analyze(pos, path, eps, res);
  if (res.epsilon_ok && !res.impossible) {
    path.clear();
    analyze(neg, path, eps, res);
  }
  return res;
}

bool closure_irreflexive(const std::set<std::pair<std::string, std::string>>& pairs) {
  try {
    make_certificate({}, pairs);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

bool is_inductive(const Inequality& ineq, const InductiveCertificate& cert) {
  BranchAnalysis res = analyze_ineq(ineq, cert.epsilon);
  if (!res.epsilon_ok || res.impossible) return false;
  for (const auto& ab : res.require)
    if (!cert.omega.count(ab)) return false;
  return true;
}

std::optional<InductiveCertificate> find_certificate(const Inequality& ineq) {
  std::vector<std::string> vars = prop_vars(ineq);
  if (vars.size() > 8) throw std::invalid_argument("certificate search capped at 8 variables");
  size_t n = vars.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::map<std::string, bool> eps;
    for (size_t i = 0; i < n; ++i) eps[vars[i]] = !(mask & (size_t{1} << i));
    BranchAnalysis res = analyze_ineq(ineq, eps);
    if (!res.epsilon_ok || res.impossible) continue;
    if (!closure_irreflexive(res.require)) continue;
    return make_certificate(std::move(eps), std::move(res.require));
  }
  return std::nullopt;
}

std::string certificate_json(const InductiveCertificate& cert) {
  std::string out = "{\"epsilon\": {";
  bool first = true;
  for (const auto& [v, e] : cert.epsilon) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + v + "\": \"" + (e ? "1" : "d") + "\"";
  }
  out += "}, \"omega\": [";
  first = true;
  for (const auto& [a, b] : cert.omega) {
    if (!first) out += ", ";
    first = false;
    out += "[\"" + a + "\", \"" + b + "\"]";
  }
  out += "]}";
  return out;
}

}  // namespace wb
