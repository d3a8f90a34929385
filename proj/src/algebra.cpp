#include "wb/algebra.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace wb {

namespace {

// Greatest element of `candidates` (bitvector over 0..n-1) w.r.t. le, or -1.
int max_of(const std::vector<uint8_t>& le, int n, const std::vector<uint8_t>& candidates) {
  for (int b = 0; b < n; ++b) {
    if (!candidates[b]) continue;
    bool greatest = true;
    for (int c = 0; c < n && greatest; ++c)
      if (candidates[c] && !le[c * n + b]) greatest = false;
    if (greatest) return b;
  }
  return -1;
}

}  // namespace

FiniteBDRG FiniteBDRG::build(std::string name, int n, std::vector<uint8_t> le, std::vector<uint8_t> prod) {
  std::vector<uint8_t> imp(n * n), coimp(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      std::vector<uint8_t> cand(n);
      for (int b = 0; b < n; ++b) cand[b] = le[prod[a * n + b] * n + c];
      int m = max_of(le, n, cand);
      if (m < 0) throw AlgebraError(name + ": residual a->c does not exist");
      imp[a * n + c] = static_cast<uint8_t>(m);
    }
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      std::vector<uint8_t> cand(n);
      for (int a = 0; a < n; ++a) cand[a] = le[prod[a * n + b] * n + c];
      int m = max_of(le, n, cand);
      if (m < 0) throw AlgebraError(name + ": residual c<-b does not exist");
      coimp[c * n + b] = static_cast<uint8_t>(m);
    }
  return build_explicit(std::move(name), n, std::move(le), std::move(prod), std::move(imp), std::move(coimp));
}

FiniteBDRG FiniteBDRG::build_explicit(std::string name, int n, std::vector<uint8_t> le, std::vector<uint8_t> prod,
                                      std::vector<uint8_t> imp, std::vector<uint8_t> coimp) {
  FiniteBDRG a;
  a.name_ = std::move(name);
  a.n_ = n;
  a.le_ = std::move(le);
  a.prod_ = std::move(prod);
  a.imp_ = std::move(imp);
  a.coimp_ = std::move(coimp);
  if (n <= 0 || a.le_.size() != size_t(n) * n || a.prod_.size() != size_t(n) * n ||
      a.imp_.size() != size_t(n) * n || a.coimp_.size() != size_t(n) * n)
    throw AlgebraError(a.name_ + ": malformed tables");

  // lattice structure from the order
  a.meet_.assign(size_t(n) * n, 0);
  a.join_.assign(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<uint8_t> lower(n), upper(n);
      for (int z = 0; z < n; ++z) {
        lower[z] = a.le_[z * n + x] && a.le_[z * n + y];
        upper[z] = a.le_[x * n + z] && a.le_[y * n + z];
      }
      int m = max_of(a.le_, n, lower);
      if (m < 0) throw AlgebraError(a.name_ + ": meet does not exist");
      a.meet_[x * n + y] = static_cast<uint8_t>(m);
      int j = -1;
      for (int z = 0; z < n; ++z) {
        if (!upper[z]) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w)
          if (upper[w] && !a.le_[z * n + w]) least = false;
        if (least) { j = z; break; }
      }
      if (j < 0) throw AlgebraError(a.name_ + ": join does not exist");
      a.join_[x * n + y] = static_cast<uint8_t>(j);
    }
  for (int x = 0; x < n; ++x) {
    bool is_bot = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      if (!a.le_[x * n + y]) is_bot = false;
      if (!a.le_[y * n + x]) is_top = false;
    }
    if (is_bot) a.bot_ = x;
    if (is_top) a.top_ = x;
  }
  if (a.bot_ < 0 || a.top_ < 0) throw AlgebraError(a.name_ + ": missing bounds");
  a.verify();
  return a;
}

void FiniteBDRG::verify() const {
  int n = n_;
  // partial order
  for (int x = 0; x < n; ++x) {
    if (!le(x, x)) throw AlgebraError(name_ + ": order not reflexive");
    for (int y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x)) throw AlgebraError(name_ + ": order not antisymmetric");
      for (int z = 0; z < n; ++z)
        if (le(x, y) && le(y, z) && !le(x, z)) throw AlgebraError(name_ + ": order not transitive");
    }
  }
  // distributivity
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
          throw AlgebraError(name_ + ": lattice not distributive");
  // residuation triple
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool p = le(prod(x, y), z);
        if (p != le(y, imp(x, z)) || p != le(x, coimp(z, y)))
          throw AlgebraError(name_ + ": residuation law fails");
      }
  // implication preservation identities
  for (int x = 0; x < n; ++x) {
    if (imp(x, top_) != top_ || imp(bot_, x) != top_)
      throw AlgebraError(name_ + ": implication unit laws fail");
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (meet(imp(x, y), imp(x, z)) != imp(x, meet(y, z)))
          throw AlgebraError(name_ + ": implication does not preserve meets");
        if (meet(imp(x, z), imp(y, z)) != imp(join(x, y), z))
          throw AlgebraError(name_ + ": implication does not reverse joins");
      }
  }
}

int FiniteBDRG::eval(const FormulaPtr& f, const std::vector<int>& env, const std::vector<std::string>& vars) const {
  switch (f->kind) {
    case FKind::Var: {
      auto it = std::find(vars.begin(), vars.end(), f->name);
      if (it == vars.end()) throw AlgebraError("unbound variable " + f->name);
      return env[it - vars.begin()];
    }
    case FKind::Top: return top_;
    case FKind::Bot: return bot_;
    case FKind::Nom:
    case FKind::Conom: throw AlgebraError("nominals are interpreted over frames, not plain algebras");
    case FKind::And: return meet(eval(f->left, env, vars), eval(f->right, env, vars));
    case FKind::Or: return join(eval(f->left, env, vars), eval(f->right, env, vars));
    case FKind::Imp: return imp(eval(f->left, env, vars), eval(f->right, env, vars));
    case FKind::Prod: return prod(eval(f->left, env, vars), eval(f->right, env, vars));
    case FKind::Coimp: return coimp(eval(f->left, env, vars), eval(f->right, env, vars));
  }
  throw std::logic_error("unreachable");
}

bool validate(const FiniteBDRG& alg, const Inequality& s, uint64_t budget) {
  std::vector<std::string> vars = prop_vars(s);
  uint64_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    total *= uint64_t(alg.size());
    if (total > budget) throw BudgetError("assignment space exceeds budget");
  }
  std::vector<int> env(vars.size(), 0);
  for (uint64_t it = 0; it < total; ++it) {
    uint64_t x = it;
    for (size_t i = 0; i < vars.size(); ++i) {
      env[i] = int(x % alg.size());
      x /= alg.size();
    }
    if (!alg.le(alg.eval(s.lhs, env, vars), alg.eval(s.rhs, env, vars))) return false;
  }
  return true;
}

bool validate_all(const FiniteBDRG& alg, const std::vector<Inequality>& seqs) {
  for (const auto& s : seqs)
    if (!validate(alg, s)) return false;
  return true;
}

namespace {

std::vector<uint8_t> chain_le(int n) {
  std::vector<uint8_t> le(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) le[a * n + b] = 1;
  return le;
}

// 2x2 product lattice: elements are bitmasks, order is inclusion.
std::vector<uint8_t> square_le() {
  std::vector<uint8_t> le(16, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) le[a * 4 + b] = (a & b) == a;
  return le;
}

}  // namespace

const std::vector<FiniteBDRG>& catalog() {
  static const std::vector<FiniteBDRG> algebras = [] {
    std::vector<FiniteBDRG> out;

    out.push_back(FiniteBDRG::build("one", 1, {1}, {0}));

    {
      std::vector<uint8_t> prod(4);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) prod[a * 2 + b] = static_cast<uint8_t>(std::min(a, b));
      out.push_back(FiniteBDRG::build("chain2-heyting", 2, chain_le(2), prod));
    }

    out.push_back(FiniteBDRG::build("chain2-zero", 2, chain_le(2), {0, 0, 0, 0}));

    {
      // 0 < 1 < 2 with truncated addition: a*b = max(a+b-2, 0)
      std::vector<uint8_t> prod(9);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) prod[a * 3 + b] = static_cast<uint8_t>(std::max(a + b - 2, 0));
      out.push_back(FiniteBDRG::build("chain3-lukasiewicz", 3, chain_le(3), prod));
    }

    {
      // non-commutative: a*b keeps the left factor unless the right is bottom
      std::vector<uint8_t> prod(16);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) prod[a * 4 + b] = static_cast<uint8_t>(b == 0 ? 0 : a);
      out.push_back(FiniteBDRG::build("square-left-action", 4, square_le(), prod));
    }

    {
      std::vector<uint8_t> prod(16);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) prod[a * 4 + b] = static_cast<uint8_t>(a & b);
      out.push_back(FiniteBDRG::build("square-heyting", 4, square_le(), prod));
    }

    return out;
  }();
  return algebras;
}

FiniteBDRG algebra_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::string name = j.value("name", "algebra");
  int n = j.at("n").get<int>();
  auto table = [&](const char* key) {
    std::vector<uint8_t> t;
    for (const auto& row : j.at(key))
      for (const auto& v : row) t.push_back(v.get<uint8_t>());
    return t;
  };
  std::vector<uint8_t> le = table("le");
  std::vector<uint8_t> prod = table("prod");
  if (j.contains("imp") && j.contains("coimp"))
    return FiniteBDRG::build_explicit(name, n, le, prod, table("imp"), table("coimp"));
  return FiniteBDRG::build(name, n, le, prod);
}

std::string algebra_to_json(const FiniteBDRG& alg) {
  nlohmann::json j;
  j["name"] = alg.name();
  int n = alg.size();
  j["n"] = n;
  auto emit = [&](const char* key, auto&& get) {
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 0; a < n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < n; ++b) row.push_back(get(a, b));
      rows.push_back(row);
    }
    j[key] = rows;
  };
  emit("le", [&](int a, int b) { return alg.le(a, b) ? 1 : 0; });
  emit("prod", [&](int a, int b) { return alg.prod(a, b); });
  emit("imp", [&](int a, int b) { return alg.imp(a, b); });
  emit("coimp", [&](int a, int b) { return alg.coimp(a, b); });
  return j.dump(2);
}

}  // namespace wb
