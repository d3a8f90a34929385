#include <cctype>
#include <set>

#include "wb/sequent.hpp"

namespace wb {

namespace {

enum class Tok {
  Ident, Nominal, Conominal, Top, Bot,
  Amp, Bar, Arrow, CoArrow, Star, LPar, RPar,
  Turnstile, Semi, Implies, Caret, Colon, Hole, End
};

struct Token {
  Tok type;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto is_id_start = [](char c) { return std::islower(static_cast<unsigned char>(c)); };
  auto is_id_char = [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    size_t start = i;
    if (is_id_start(c)) {
      size_t j = i;
      while (j < s.size() && is_id_char(s[j])) ++j;
      std::string id = s.substr(i, j - i);
      // j:name / m:name are nominal / conominal literals
      if ((id == "j" || id == "m") && j < s.size() && s[j] == ':' && j + 1 < s.size() && is_id_start(s[j + 1])) {
        size_t k = j + 1;
        while (k < s.size() && is_id_char(s[k])) ++k;
        out.push_back({id == "j" ? Tok::Nominal : Tok::Conominal, s.substr(j + 1, k - j - 1), start});
        i = k;
        continue;
      }
      if (id == "top") out.push_back({Tok::Top, id, start});
      else if (id == "bot") out.push_back({Tok::Bot, id, start});
      else out.push_back({Tok::Ident, id, start});
      i = j;
      continue;
    }
    switch (c) {
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; break;
      case '*': out.push_back({Tok::Star, "*", start}); ++i; break;
      case '(': out.push_back({Tok::LPar, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RPar, ")", start}); ++i; break;
      case ';': out.push_back({Tok::Semi, ";", start}); ++i; break;
      case '^': out.push_back({Tok::Caret, "^", start}); ++i; break;
      case ':': out.push_back({Tok::Colon, ":", start}); ++i; break;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '-') { out.push_back({Tok::Turnstile, "|-", start}); i += 2; }
        else { out.push_back({Tok::Bar, "|", start}); ++i; }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') { out.push_back({Tok::Arrow, "->", start}); i += 2; }
        else throw ParseError("stray '-'", start);
        break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '-') { out.push_back({Tok::CoArrow, "<-", start}); i += 2; }
        else if (i + 1 < s.size() && s[i + 1] == '=') { out.push_back({Tok::Turnstile, "<=", start}); i += 2; }
        else throw ParseError("stray '<'", start);
        break;
      case '=':
        if (i + 1 < s.size() && s[i + 1] == '>') { out.push_back({Tok::Implies, "=>", start}); i += 2; }
        else throw ParseError("stray '='", start);
        break;
      case '[':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == ']') {
          out.push_back({Tok::Hole, "[-]", start});
          i += 3;
        } else {
          throw ParseError("expected '[-]'", start);
        }
        break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, Lang lang)
      : text_(text), lang_(lang), toks_(lex(text)) {}

  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }
  bool accept(Tok t) {
    if (peek().type == t) { ++idx_; return true; }
    return false;
  }
  void expect(Tok t, const char* what) {
    if (!accept(t)) throw ParseError(std::string("expected ") + what, peek().pos);
  }
  void expect_end() {
    if (peek().type != Tok::End) throw ParseError("trailing input", peek().pos);
  }

  // In a quantified quasi-inequality body, these bare names denote nominals
  // and conominals.
  std::set<std::string> nom_names, conom_names;

  FormulaPtr formula() { return imp_level(); }

  FormulaPtr imp_level() {
    FormulaPtr f = prod_level();
    for (;;) {
      if (peek().type == Tok::Arrow) {
        size_t pos = next().pos;
        f = check(f_imp(f, prod_level()), pos);
      } else if (peek().type == Tok::CoArrow) {
        size_t pos = next().pos;
        f = check(f_coimp(f, prod_level()), pos);
      } else {
        return f;
      }
    }
  }

  FormulaPtr prod_level() {
    FormulaPtr f = lattice_level();
    while (peek().type == Tok::Star) {
      size_t pos = next().pos;
      f = check(f_prod(f, lattice_level()), pos);
    }
    return f;
  }

  FormulaPtr lattice_level() {
    FormulaPtr f = primary();
    for (;;) {
      if (peek().type == Tok::Amp) {
        next();
        f = f_and(f, primary());
      } else if (peek().type == Tok::Bar) {
        next();
        f = f_or(f, primary());
      } else {
        return f;
      }
    }
  }

  FormulaPtr primary() {
    Token t = next();
    switch (t.type) {
      case Tok::Top: return f_top();
      case Tok::Bot: return f_bot();
      case Tok::Ident:
        if (nom_names.count(t.text)) return check(f_nom(t.text), t.pos);
        if (conom_names.count(t.text)) return check(f_conom(t.text), t.pos);
        return f_var(t.text);
      case Tok::Nominal: return check(f_nom(t.text), t.pos);
      case Tok::Conominal: return check(f_conom(t.text), t.pos);
      case Tok::LPar: {
        FormulaPtr f = formula();
        expect(Tok::RPar, "')'");
        return f;
      }
      default: throw ParseError("expected a formula", t.pos);
    }
  }

  Inequality inequality() {
    FormulaPtr l = formula();
    expect(Tok::Turnstile, "'|-'");
    FormulaPtr r = formula();
    return {l, r};
  }

  QuasiInequality quasi() {
    if (peek().type == Tok::Ident && peek().text == "forall") {
      next();
      while (peek().type == Tok::Ident) {
        std::string n = next().text;
        if (n[0] == 'm' || n[0] == 'n' || n[0] == 'o')
          conom_names.insert(n);
        else
          nom_names.insert(n);
      }
      expect(Tok::Colon, "':' after forall names");
    }
    std::vector<Inequality> items;
    items.push_back(inequality());
    while (accept(Tok::Semi)) items.push_back(inequality());
    QuasiInequality q;
    if (accept(Tok::Implies)) {
      q.antecedent = std::move(items);
      q.consequent = inequality();
    } else {
      if (items.size() != 1) throw ParseError("expected '=>'", peek().pos);
      q.consequent = items[0];
    }
    return q;
  }

  StructurePtr structure() {
    StructurePtr s = structure_primary();
    for (;;) {
      if (peek().type == Tok::Ident && peek().text == "o") {
        next();
        s = s_prod(s, structure_primary());
      } else if (peek().type == Tok::Caret) {
        next();
        s = s_meet(s, structure_primary());
      } else {
        return s;
      }
    }
  }

  // A parenthesized group containing structural operators is a substructure;
  // otherwise it is a formula leaf.
  StructurePtr structure_primary() {
    if (accept(Tok::Hole)) return s_hole();
    if (peek().type == Tok::LPar && group_is_structural()) {
      expect(Tok::LPar, "'('");
      StructurePtr s = structure();
      expect(Tok::RPar, "')'");
      return s;
    }
    return s_leaf(formula());
  }

  bool group_is_structural() const {
    int depth = 0;
    for (size_t i = idx_; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.type == Tok::LPar) ++depth;
      else if (t.type == Tok::RPar) {
        if (--depth == 0) return false;
      } else if (depth == 1 &&
                 (t.type == Tok::Caret || t.type == Tok::Hole || (t.type == Tok::Ident && t.text == "o"))) {
        return true;
      } else if (t.type == Tok::End) {
        return false;
      }
    }
    return false;
  }

  ConsecutionSequent consecution() {
    StructurePtr a = structure();
    expect(Tok::Turnstile, "'|-'");
    FormulaPtr f = formula();
    if (!in_lang(f, Lang::LC)) throw LangError("succedent must be an lc formula: " + print(f));
    return {a, f};
  }

 private:
  FormulaPtr check(FormulaPtr f, size_t pos) {
    if (!in_lang(f, lang_)) {
      throw ParseError(std::string("subterm not in language ") + lang_name(lang_) + ": " + print(f), pos);
    }
    return f;
  }

  std::string text_;
  Lang lang_;
  std::vector<Token> toks_;
  size_t idx_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, Lang lang) {
  Parser p(text, lang);
  FormulaPtr f = p.formula();
  p.expect_end();
  if (!in_lang(f, lang))
    throw ParseError(std::string("formula not in language ") + lang_name(lang) + ": " + print(f), 0);
  return f;
}

Inequality parse_inequality(const std::string& text, Lang lang) {
  Parser p(text, lang);
  Inequality s = p.inequality();
  p.expect_end();
  if (!in_lang(s.lhs, lang) || !in_lang(s.rhs, lang))
    throw ParseError(std::string("sequent not in language ") + lang_name(lang), 0);
  return s;
}

QuasiInequality parse_quasi(const std::string& text) {
  Parser p(text, Lang::LCX);
  QuasiInequality q = p.quasi();
  p.expect_end();
  return q;
}

StructurePtr parse_structure(const std::string& text) {
  Parser p(text, Lang::LC);
  StructurePtr s = p.structure();
  p.expect_end();
  return s;
}

ConsecutionSequent parse_consecution(const std::string& text) {
  Parser p(text, Lang::LC);
  ConsecutionSequent s = p.consecution();
  p.expect_end();
  return s;
}

}  // namespace wb
