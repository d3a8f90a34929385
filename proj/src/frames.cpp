#include "wb/frames.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace wb {

namespace {

struct BinaryOps {
  int n;
  WorldSet full;
  WorldSet image[4];     // image[w] = { v : w R v }
  WorldSet preimage[4];  // preimage[w] = { u : u R w }

  explicit BinaryOps(const BinaryFrame& f) : n(f.n), full(WorldSet((1u << f.n) - 1)) {
    for (int w = 0; w < n; ++w) {
      image[w] = 0;
      preimage[w] = 0;
      for (int v = 0; v < n; ++v) {
        if (f.has(w, v)) image[w] |= WorldSet(1u << v);
        if (f.has(v, w)) preimage[w] |= WorldSet(1u << v);
      }
    }
  }

  WorldSet imp(WorldSet x, WorldSet y) const {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w)
      if ((image[w] & x & ~y) == 0) out |= WorldSet(1u << w);
    return out;
  }
  WorldSet coimp(WorldSet x, WorldSet y) const {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w)
      if ((x >> w & 1) || (preimage[w] & y) == 0) out |= WorldSet(1u << w);
    return out;
  }
  WorldSet prod(WorldSet x, WorldSet y) const {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w)
      if ((x >> w & 1) && (preimage[w] & y) != 0) out |= WorldSet(1u << w);
    return out;
  }
};

struct TernaryOps {
  const TernaryFrame& f;
  int n;
  WorldSet full;

  explicit TernaryOps(const TernaryFrame& fr) : f(fr), n(fr.n), full(WorldSet((1u << fr.n) - 1)) {}

  WorldSet imp(WorldSet x, WorldSet y) const {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (!(x >> u & 1)) continue;
        for (int v = 0; v < n && ok; ++v)
          if (f.has(v, u, w) && !(y >> v & 1)) ok = false;
      }
      if (ok) out |= WorldSet(1u << w);
    }
    return out;
  }
  WorldSet coimp(WorldSet x, WorldSet y) const {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (!(y >> u & 1)) continue;
        for (int v = 0; v < n && ok; ++v)
          if (f.has(v, w, u) && !(x >> v & 1)) ok = false;
      }
      if (ok) out |= WorldSet(1u << w);
    }
    return out;
  }
  WorldSet prod(WorldSet x, WorldSet y) const {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w) {
      bool hit = false;
      for (int u = 0; u < n && !hit; ++u) {
        if (!(x >> u & 1)) continue;
        for (int v = 0; v < n && !hit; ++v)
          if ((y >> v & 1) && f.has(w, u, v)) hit = true;
      }
      if (hit) out |= WorldSet(1u << w);
    }
    return out;
  }
};

template <typename Ops>
WorldSet eval_rec(const Ops& ops, const FormulaPtr& phi, const Valuation& val) {
  switch (phi->kind) {
    case FKind::Var:
    case FKind::Nom:
    case FKind::Conom: {
      auto it = val.find(phi->name);
      if (it == val.end()) throw AlgebraError("unbound atom " + phi->name);
      return it->second;
    }
    case FKind::Top: return ops.full;
    case FKind::Bot: return 0;
    case FKind::And: return eval_rec(ops, phi->left, val) & eval_rec(ops, phi->right, val);
    case FKind::Or: return eval_rec(ops, phi->left, val) | eval_rec(ops, phi->right, val);
    case FKind::Imp: return ops.imp(eval_rec(ops, phi->left, val), eval_rec(ops, phi->right, val));
    case FKind::Coimp: return ops.coimp(eval_rec(ops, phi->left, val), eval_rec(ops, phi->right, val));
    case FKind::Prod: return ops.prod(eval_rec(ops, phi->left, val), eval_rec(ops, phi->right, val));
  }
  throw std::logic_error("unreachable");
}

template <typename Ops>
FiniteBDRG dual_algebra(std::string name, const Ops& ops) {
  int n = ops.full + 1;
  std::vector<uint8_t> le(n * n), prod(n * n), imp(n * n), coimp(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      le[a * n + b] = (a & ~b) == 0;
      prod[a * n + b] = static_cast<uint8_t>(ops.prod(WorldSet(a), WorldSet(b)));
      imp[a * n + b] = static_cast<uint8_t>(ops.imp(WorldSet(a), WorldSet(b)));
      coimp[a * n + b] = static_cast<uint8_t>(ops.coimp(WorldSet(a), WorldSet(b)));
    }
  return FiniteBDRG::build_explicit(std::move(name), n, std::move(le), std::move(prod), std::move(imp),
                                    std::move(coimp));
}

// Assignment domains for the three atom namespaces.
enum class AtomSort { Prop, Nom, Conom };

struct SystemAtom {
  std::string name;
  AtomSort sort;
};

template <typename Ops>
class SystemChecker {
 public:
  SystemChecker(const Ops& ops, const std::vector<Inequality>& antecedents, const Inequality& goal)
      : ops_(ops), antecedents_(antecedents), goal_(goal) {
    auto add = [&](const FormulaPtr& f) {
      for (const auto& v : atom_names(f, FKind::Var)) add_atom(v, AtomSort::Prop);
      for (const auto& v : atom_names(f, FKind::Nom)) add_atom(v, AtomSort::Nom);
      for (const auto& v : atom_names(f, FKind::Conom)) add_atom(v, AtomSort::Conom);
    };
    for (const auto& a : antecedents_) { add(a.lhs); add(a.rhs); }
    add(goal_.lhs);
    add(goal_.rhs);
    // An antecedent is checked as soon as all its atoms have values.
    ready_at_.resize(antecedents_.size());
    for (size_t i = 0; i < antecedents_.size(); ++i) {
      size_t last = 0;
      for (size_t k = 0; k < atoms_.size(); ++k) {
        if (occurs_in(antecedents_[i], atoms_[k].name)) last = k + 1;
      }
      ready_at_[i] = last;
    }
  }

  bool valid() { return assign(0); }

 private:
  void add_atom(const std::string& name, AtomSort sort) {
    for (const auto& a : atoms_)
      if (a.name == name) return;
    atoms_.push_back({name, sort});
  }

  static bool occurs_in(const Inequality& s, const std::string& name) {
    return occurs(s.lhs, name, FKind::Var) || occurs(s.rhs, name, FKind::Var) ||
           occurs(s.lhs, name, FKind::Nom) || occurs(s.rhs, name, FKind::Nom) ||
           occurs(s.lhs, name, FKind::Conom) || occurs(s.rhs, name, FKind::Conom);
  }

  bool holds(const Inequality& s) const {
    WorldSet l = eval_rec(ops_, s.lhs, val_);
    WorldSet r = eval_rec(ops_, s.rhs, val_);
    return (l & ~r) == 0;
  }

  bool assign(size_t k) {
    for (size_t i = 0; i < antecedents_.size(); ++i)
      if (ready_at_[i] == k && !holds(antecedents_[i])) return true;  // vacuously true below here
    if (k == atoms_.size()) return holds(goal_);
    const SystemAtom& atom = atoms_[k];
    if (atom.sort == AtomSort::Prop) {
      for (WorldSet s = 0; s <= ops_.full; ++s) {
        val_[atom.name] = s;
        if (!assign(k + 1)) return false;
      }
    } else {
      for (int w = 0; w < ops_.n; ++w) {
        WorldSet single = WorldSet(1u << w);
        val_[atom.name] = atom.sort == AtomSort::Nom ? single : WorldSet(ops_.full & ~single);
        if (!assign(k + 1)) return false;
      }
    }
    val_.erase(atom.name);
    return true;
  }

  const Ops& ops_;
  const std::vector<Inequality>& antecedents_;
  const Inequality& goal_;
  std::vector<SystemAtom> atoms_;
  std::vector<size_t> ready_at_;
  Valuation val_;
};

}  // namespace

WorldSet eval_on(const BinaryFrame& f, const FormulaPtr& phi, const Valuation& val) {
  return eval_rec(BinaryOps(f), phi, val);
}
WorldSet eval_on(const TernaryFrame& f, const FormulaPtr& phi, const Valuation& val) {
  return eval_rec(TernaryOps(f), phi, val);
}

FiniteBDRG dual_algebra_binary(const BinaryFrame& f) {
  return dual_algebra("dual-b" + std::to_string(f.n) + "-" + std::to_string(f.rel), BinaryOps(f));
}
FiniteBDRG dual_algebra_ternary(const TernaryFrame& f) {
  return dual_algebra("dual-t" + std::to_string(f.n) + "-" + std::to_string(f.rel), TernaryOps(f));
}

bool validate_quasi(const BinaryFrame& f, const QuasiInequality& q) {
  if (!is_pure(q)) throw std::invalid_argument("validate_quasi expects a pure quasi-inequality");
  BinaryOps ops(f);
  return SystemChecker(ops, q.antecedent, q.consequent).valid();
}

bool validate_quasi(const TernaryFrame& f, const QuasiInequality& q) {
  if (!is_pure(q)) throw std::invalid_argument("validate_quasi expects a pure quasi-inequality");
  TernaryOps ops(f);
  return SystemChecker(ops, q.antecedent, q.consequent).valid();
}

bool system_valid(const BinaryFrame& f, const std::vector<Inequality>& antecedents, const Inequality& goal) {
  BinaryOps ops(f);
  return SystemChecker(ops, antecedents, goal).valid();
}

bool fo_correspondent(const std::string& axiom, const BinaryFrame& f) {
  int n = f.n;
  auto all2 = [&](auto&& p) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!p(x, y)) return false;
    return true;
  };
  auto all3 = [&](auto&& p) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!p(x, y, z)) return false;
    return true;
  };
  if (axiom == "I" || axiom == "Tr") return true;  // tautologous conditions
  if (axiom == "MP") {
    for (int x = 0; x < n; ++x)
      if (!f.has(x, x)) return false;
    return true;
  }
  if (axiom == "W") return all2([&](int x, int y) { return !f.has(y, x) || x == y; });
  if (axiom == "RT")
    return all3([&](int x, int y, int z) { return !(f.has(x, y) && f.has(y, z)) || f.has(x, z); });
  if (axiom == "B")
    return all3([&](int x, int y, int z) { return !(f.has(y, x) && f.has(z, y)) || (f.has(z, x) && f.has(y, x)); });
  if (axiom == "B'")
    return all3([&](int x, int y, int z) { return !(f.has(y, x) && f.has(z, y)) || (f.has(y, x) && f.has(z, x)); });
  if (axiom == "C")
    return all3([&](int x, int y, int z) {
      return !(f.has(y, x) && f.has(z, y)) || (f.has(x, x) && x == y && f.has(z, x));
    });
  if (axiom == "Fr")
    return all3([&](int x, int y, int z) {
      return !(f.has(y, x) && f.has(z, y)) || (f.has(x, x) && f.has(y, x) && f.has(z, x));
    });
  if (axiom == "W'") return all2([&](int x, int y) { return !f.has(y, x) || f.has(x, x); });
  if (axiom == "Sym") return all2([&](int x, int y) { return !f.has(x, y) || f.has(y, x); });
  if (axiom == "Euc")
    return all3([&](int x, int y, int z) { return !(f.has(x, y) && f.has(x, z)) || f.has(y, z); });
  if (axiom == "D") {
    for (int x = 0; x < n; ++x) {
      bool some = false;
      for (int y = 0; y < n && !some; ++y) some = f.has(x, y);
      if (!some) return false;
    }
    return true;
  }
  throw std::invalid_argument("unknown axiom tag: " + axiom);
}

bool fo_correspondent(const std::string& axiom, const TernaryFrame& f) {
  int n = f.n;
  auto all3 = [&](auto&& p) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!p(x, y, z)) return false;
    return true;
  };
  auto all5 = [&](auto&& p) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
              if (!p(x, y, z, u, w)) return false;
    return true;
  };
  auto some1 = [&](auto&& p) {
    for (int v = 0; v < n; ++v)
      if (p(v)) return true;
    return false;
  };
  if (axiom == "I") return all3([&](int x, int y, int z) { return !f.has(z, x, y) || z == x; });
  if (axiom == "Tr")
    return all3([&](int x, int y, int z) {
      return !f.has(z, x, y) || some1([&](int u) { return f.has(z, u, y) && f.has(u, x, y); });
    });
  if (axiom == "MP") {
    for (int x = 0; x < n; ++x)
      if (!f.has(x, x, x)) return false;
    return true;
  }
  if (axiom == "W") return all3([&](int x, int y, int z) { return !f.has(z, x, y) || z == y; });
  if (axiom == "RT")
    return all5([&](int x, int y, int z, int u, int v) {
      return !(f.has(u, x, v) && f.has(v, y, z)) || f.has(u, x, z);
    });
  if (axiom == "B")
    return all5([&](int x, int y, int z, int u, int w) {
      return !(f.has(u, x, w) && f.has(w, y, z)) ||
             some1([&](int v) { return f.has(u, v, z) && f.has(v, x, y); });
    });
  if (axiom == "B'")
    return all5([&](int x, int y, int z, int u, int w) {
      return !(f.has(u, x, w) && f.has(w, y, z)) ||
             some1([&](int v) { return f.has(u, v, y) && f.has(v, x, z); });
    });
  if (axiom == "C")
    return all5([&](int x, int y, int z, int u, int w) {
      return !(f.has(u, x, w) && f.has(w, y, z)) ||
             some1([&](int v) { return f.has(u, y, v) && f.has(v, x, z); });
    });
  if (axiom == "Fr")
    return all5([&](int x, int y, int z, int u, int w) {
      if (!(f.has(u, x, w) && f.has(w, y, z))) return true;
      for (int v0 = 0; v0 < n; ++v0)
        for (int v1 = 0; v1 < n; ++v1)
          if (f.has(u, v0, v1) && f.has(v0, x, y) && f.has(v1, x, z)) return true;
      return false;
    });
  if (axiom == "W'")
    return all3([&](int x, int y, int z) {
      return !f.has(z, x, y) || some1([&](int u) { return f.has(z, x, u) && f.has(u, x, y); });
    });
  if (axiom == "Sym") return all3([&](int x, int y, int v) { return !f.has(v, y, x) || f.has(x, x, y); });
  if (axiom == "Euc")
    return all5([&](int x, int y, int z, int u, int v) {
      return !(f.has(v, y, z) && f.has(u, x, z)) || f.has(u, x, y);
    });
  if (axiom == "D") {
    for (int x = 0; x < n; ++x) {
      bool some = false;
      for (int y = 0; y < n && !some; ++y)
        for (int z = 0; z < n && !some; ++z) some = f.has(z, y, x);
      if (!some) return false;
    }
    return true;
  }
  throw std::invalid_argument("unknown axiom tag: " + axiom);
}

std::vector<BinaryFrame> enumerate_binary(int n) {
  if (n < 1 || n > 4) throw BudgetError("exhaustive binary enumeration supports 1..4 worlds");
  std::vector<BinaryFrame> out;
  out.reserve(size_t{1} << (n * n));
  for (uint32_t rel = 0; rel < (uint32_t{1} << (n * n)); ++rel) out.push_back({n, uint16_t(rel)});
  return out;
}

std::vector<TernaryFrame> enumerate_ternary(int n) {
  if (n < 1 || n > 2) throw BudgetError("exhaustive ternary enumeration supports 1..2 worlds");
  std::vector<TernaryFrame> out;
  out.reserve(size_t{1} << (n * n * n));
  for (uint32_t rel = 0; rel < (uint32_t{1} << (n * n * n)); ++rel) out.push_back({n, rel});
  return out;
}

std::vector<BinaryFrame> sample_binary(int n, int count, uint64_t seed) {
  if (n < 1 || n > 4) throw BudgetError("binary frames support at most 4 worlds");
  std::mt19937_64 rng(seed);
  std::set<uint16_t> seen;
  std::vector<BinaryFrame> out;
  while (static_cast<int>(out.size()) < count) {
    uint16_t rel = uint16_t(rng() & ((uint32_t{1} << (n * n)) - 1));
    if (seen.insert(rel).second) out.push_back({n, rel});
  }
  return out;
}

std::vector<TernaryFrame> sample_ternary(int n, int count, uint64_t seed) {
  if (n < 1 || n > 3) throw BudgetError("ternary frames support at most 3 worlds");
  std::mt19937_64 rng(seed);
  std::set<uint32_t> seen;
  std::vector<TernaryFrame> out;
  while (static_cast<int>(out.size()) < count) {
    uint32_t rel = uint32_t(rng() & ((uint64_t{1} << (n * n * n)) - 1));
    if (seen.insert(rel).second) out.push_back({n, rel});
  }
  return out;
}

}  // namespace wb
