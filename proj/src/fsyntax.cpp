#include "dlal/fsyntax.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dlal {

FTypeRef tvar(std::string name, int id) {
  auto t = std::make_shared<FType>();
  t->kind = FType::Kind::Var;
  t->name = std::move(name);
  t->id = id;
  return t;
}

FTypeRef tarrow(FTypeRef dom, FTypeRef cod) {
  auto t = std::make_shared<FType>();
  t->kind = FType::Kind::Arrow;
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

FTypeRef tforall(std::string name, int id, FTypeRef body) {
  auto t = std::make_shared<FType>();
  t->kind = FType::Kind::Forall;
  t->name = std::move(name);
  t->id = id;
  t->body = std::move(body);
  return t;
}

namespace {

// Innermost-first lookup so shadowed binders resolve correctly.
bool corr_lookup(const std::vector<std::pair<int, int>>& corr, int a, int& b) {
  for (auto it = corr.rbegin(); it != corr.rend(); ++it) {
    if (it->first == a) {
      b = it->second;
      return true;
    }
  }
  return false;
}

bool corr_lookup_right(const std::vector<std::pair<int, int>>& corr, int b, int& a) {
  for (auto it = corr.rbegin(); it != corr.rend(); ++it) {
    if (it->second == b) {
      a = it->first;
      return true;
    }
  }
  return false;
}

bool type_equal_rec(const FTypeRef& a, const FTypeRef& b,
                    std::vector<std::pair<int, int>>& corr) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FType::Kind::Var: {
      int m;
      bool ab = corr_lookup(corr, a->id, m);
      int m2;
      bool bb = corr_lookup_right(corr, b->id, m2);
      if (ab != bb) return false;
      if (ab) return m == b->id && m2 == a->id;
      return a->name == b->name;  // both free
    }
    case FType::Kind::Arrow:
      return type_equal_rec(a->dom, b->dom, corr) && type_equal_rec(a->cod, b->cod, corr);
    case FType::Kind::Forall: {
      corr.emplace_back(a->id, b->id);
      bool r = type_equal_rec(a->body, b->body, corr);
      corr.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

bool type_equal(const FTypeRef& a, const FTypeRef& b) {
  std::vector<std::pair<int, int>> corr;
  return type_equal_rec(a, b, corr);
}

void free_type_var_ids(const FTypeRef& t, std::set<int>& out) {
  struct W {
    std::set<int> bound;
    std::set<int>* out;
    void go(const FTypeRef& t) {
      switch (t->kind) {
        case FType::Kind::Var:
          if (!bound.count(t->id)) out->insert(t->id);
          break;
        case FType::Kind::Arrow:
          go(t->dom);
          go(t->cod);
          break;
        case FType::Kind::Forall: {
          bool fresh = bound.insert(t->id).second;
          go(t->body);
          if (fresh) bound.erase(t->id);
          break;
        }
      }
    }
  } w{{}, &out};
  w.go(t);
}

bool type_has_free_name(const FTypeRef& t, const std::string& name) {
  switch (t->kind) {
    case FType::Kind::Var:
      return t->name == name;
    case FType::Kind::Arrow:
      return type_has_free_name(t->dom, name) || type_has_free_name(t->cod, name);
    case FType::Kind::Forall:
      if (t->name == name) return false;  // shadowed as written
      return type_has_free_name(t->body, name);
  }
  return false;
}

FTypeRef subst_type(const FTypeRef& t, int var_id, const FTypeRef& u) {
  switch (t->kind) {
    case FType::Kind::Var:
      return t->id == var_id ? u : t;
    case FType::Kind::Arrow: {
      FTypeRef d = subst_type(t->dom, var_id, u);
      FTypeRef c = subst_type(t->cod, var_id, u);
      if (d == t->dom && c == t->cod) return t;
      return tarrow(d, c);
    }
    case FType::Kind::Forall: {
      if (t->id == var_id) return t;  // shadowed
      FTypeRef b = subst_type(t->body, var_id, u);
      if (b == t->body) return t;
      return tforall(t->name, t->id, b);
    }
  }
  return t;
}

// -------- terms --------

FTermRef mkvar(std::string name, int id, FTypeRef annot) {
  auto t = std::make_shared<FTerm>();
  t->kind = FTerm::Kind::Var;
  t->name = std::move(name);
  t->id = id;
  t->annot = std::move(annot);
  return t;
}

FTermRef mklam(std::string name, int id, FTypeRef annot, FTermRef body) {
  auto t = std::make_shared<FTerm>();
  t->kind = FTerm::Kind::Lam;
  t->name = std::move(name);
  t->id = id;
  t->annot = std::move(annot);
  t->body = std::move(body);
  return t;
}

FTermRef mkapp(FTermRef fun, FTermRef arg) {
  auto t = std::make_shared<FTerm>();
  t->kind = FTerm::Kind::App;
  t->fun = std::move(fun);
  t->arg = std::move(arg);
  return t;
}

FTermRef mktlam(std::string name, int id, FTermRef body) {
  auto t = std::make_shared<FTerm>();
  t->kind = FTerm::Kind::TLam;
  t->name = std::move(name);
  t->id = id;
  t->body = std::move(body);
  return t;
}

FTermRef mktapp(FTermRef fun, FTypeRef targ) {
  auto t = std::make_shared<FTerm>();
  t->kind = FTerm::Kind::TApp;
  t->fun = std::move(fun);
  t->targ = std::move(targ);
  return t;
}

// -------- lexer / parser --------

namespace {

struct Tok {
  enum K { Ident, Lambda, TLambda, Colon, Dot, Arrow, LParen, RParen, LBrack, RBrack, Forall, End };
  K k;
  std::string s;
  int line, col;
};

struct Lexer {
  std::string_view src;
  size_t i = 0;
  int line = 1, col = 1;

  void bump(size_t n = 1) {
    for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  Tok next() {
    for (;;) {
      while (i < src.size() && (src[i] == ' ' || src[i] == '\t' || src[i] == '\n' || src[i] == '\r'))
        bump();
      if (i + 1 < src.size() && src[i] == '-' && src[i + 1] == '-') {
        while (i < src.size() && src[i] != '\n') bump();
        continue;
      }
      break;
    }
    int l = line, c = col;
    if (i >= src.size()) return {Tok::End, "", l, c};
    char ch = src[i];
    if (ch == '\\') {
      bump();
      return {Tok::Lambda, "\\", l, c};
    }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '\\') {
      bump(2);
      return {Tok::TLambda, "/\\", l, c};
    }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      bump(2);
      return {Tok::Arrow, "->", l, c};
    }
    switch (ch) {
      case ':': bump(); return {Tok::Colon, ":", l, c};
      case '.': bump(); return {Tok::Dot, ".", l, c};
      case '(': bump(); return {Tok::LParen, "(", l, c};
      case ')': bump(); return {Tok::RParen, ")", l, c};
      case '[': bump(); return {Tok::LBrack, "[", l, c};
      case ']': bump(); return {Tok::RBrack, "]", l, c};
      default: break;
    }
    if (isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t start = i;
      while (i < src.size() &&
             (isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '\''))
        bump();
      std::string s(src.substr(start, i - start));
      if (s == "forall") return {Tok::Forall, s, l, c};
      return {Tok::Ident, s, l, c};
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
  }
};

struct Parser {
  Lexer lex;
  Tok cur;
  int next_id = 1;
  std::vector<std::tuple<std::string, int, FTypeRef>> term_env;
  std::vector<std::pair<std::string, int>> type_env;
  std::map<std::string, int> free_type_names;

  explicit Parser(std::string_view src) : lex{src} { cur = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur.line, cur.col); }

  void advance() { cur = lex.next(); }

  void expect(Tok::K k, const char* what) {
    if (cur.k != k) fail(std::string("expected ") + what);
    advance();
  }

  int fresh() { return next_id++; }

  int resolve_type_name(const std::string& n) {
    for (auto it = type_env.rbegin(); it != type_env.rend(); ++it)
      if (it->first == n) return it->second;
    auto it = free_type_names.find(n);
    if (it != free_type_names.end()) return it->second;
    int id = fresh();
    free_type_names.emplace(n, id);
    return id;
  }

  FTypeRef type_atom() {
    if (cur.k == Tok::LParen) {
      advance();
      FTypeRef t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (cur.k == Tok::Ident) {
      std::string n = cur.s;
      advance();
      if (n == "N") return nat_expansion();
      if (n == "W") return word_expansion();
      return tvar(n, resolve_type_name(n));
    }
    fail("expected a type");
  }

  FTypeRef type() {
    if (cur.k == Tok::Forall) {
      advance();
      if (cur.k != Tok::Ident) fail("expected a type variable after 'forall'");
      std::string n = cur.s;
      advance();
      expect(Tok::Dot, "'.'");
      int id = fresh();
      type_env.emplace_back(n, id);
      FTypeRef b = type();
      type_env.pop_back();
      return tforall(n, id, b);
    }
    FTypeRef t = type_atom();
    if (cur.k == Tok::Arrow) {
      advance();
      return tarrow(t, type());
    }
    return t;
  }

  FTypeRef nat_expansion() {
    int a = fresh();
    auto v = [&] { return tvar("a", a); };
    return tforall("a", a, tarrow(tarrow(v(), v()), tarrow(v(), v())));
  }

  FTypeRef word_expansion() {
    int a = fresh();
    auto v = [&] { return tvar("a", a); };
    auto aa = [&] { return tarrow(v(), v()); };
    return tforall("a", a, tarrow(aa(), tarrow(aa(), aa())));
  }

  FTermRef term() {
    if (cur.k == Tok::Lambda) {
      advance();
      if (cur.k != Tok::Ident) fail("expected a variable after '\\'");
      std::string n = cur.s;
      advance();
      expect(Tok::Colon, "':'");
      FTypeRef ty = type();
      expect(Tok::Dot, "'.'");
      int id = fresh();
      term_env.emplace_back(n, id, ty);
      FTermRef b = term();
      term_env.pop_back();
      return mklam(n, id, ty, b);
    }
    if (cur.k == Tok::TLambda) {
      advance();
      if (cur.k != Tok::Ident) fail("expected a type variable after '/\\'");
      std::string n = cur.s;
      advance();
      expect(Tok::Dot, "'.'");
      int id = fresh();
      type_env.emplace_back(n, id);
      FTermRef b = term();
      type_env.pop_back();
      return mktlam(n, id, b);
    }
    FTermRef t = atom();
    for (;;) {
      if (cur.k == Tok::LBrack) {
        advance();
        FTypeRef ty = type();
        expect(Tok::RBrack, "']'");
        t = mktapp(t, ty);
      } else if (cur.k == Tok::Ident || cur.k == Tok::LParen) {
        t = mkapp(t, atom());
      } else {
        break;
      }
    }
    return t;
  }

  FTermRef atom() {
    if (cur.k == Tok::LParen) {
      advance();
      FTermRef t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (cur.k == Tok::Ident) {
      std::string n = cur.s;
      int l = cur.line, c = cur.col;
      advance();
      for (auto it = term_env.rbegin(); it != term_env.rend(); ++it)
        if (std::get<0>(*it) == n) return mkvar(n, std::get<1>(*it), std::get<2>(*it));
      throw ParseError("unbound variable '" + n + "'", l, c);
    }
    fail("expected a term");
  }
};

}  // namespace

FTermRef parse_term(std::string_view text) {
  Parser p(text);
  FTermRef t = p.term();
  if (p.cur.k != Tok::End) p.fail("unexpected trailing input");
  return t;
}

FTypeRef parse_type(std::string_view text) {
  Parser p(text);
  FTypeRef t = p.type();
  if (p.cur.k != Tok::End) p.fail("unexpected trailing input");
  return t;
}

// -------- printing --------

namespace {

// Display names for binders: a binder keeps its name unless an occurrence of an
// outer variable with that name appears in its scope, in which case primes are
// appended until reparsing resolves every occurrence to its original binder.
struct DisplayNames {
  std::unordered_map<int, std::string> names;

  std::string of(int id, const std::string& fallback) const {
    auto it = names.find(id);
    return it == names.end() ? fallback : it->second;
  }
};

void collect_type_occurrences(const FTypeRef& t, std::set<int>& inner_bound,
                              std::vector<std::pair<int, std::string>>& out) {
  switch (t->kind) {
    case FType::Kind::Var:
      out.emplace_back(t->id, t->name);
      break;
    case FType::Kind::Arrow:
      collect_type_occurrences(t->dom, inner_bound, out);
      collect_type_occurrences(t->cod, inner_bound, out);
      break;
    case FType::Kind::Forall:
      inner_bound.insert(t->id);
      collect_type_occurrences(t->body, inner_bound, out);
      break;
  }
}

bool type_scope_conflict(const FTypeRef& body, int binder_id, const std::string& cand,
                         const DisplayNames& dn) {
  std::vector<std::pair<int, std::string>> occ;
  std::set<int> inner;
  collect_type_occurrences(body, inner, occ);
  for (auto& [id, nm] : occ) {
    if (id == binder_id || inner.count(id)) continue;
    if (dn.of(id, nm) == cand) return true;
  }
  return false;
}

void assign_type_displays(const FTypeRef& t, DisplayNames& dn) {
  switch (t->kind) {
    case FType::Kind::Var:
      break;
    case FType::Kind::Arrow:
      assign_type_displays(t->dom, dn);
      assign_type_displays(t->cod, dn);
      break;
    case FType::Kind::Forall: {
      std::string cand = t->name;
      while (type_scope_conflict(t->body, t->id, cand, dn)) cand += '\'';
      dn.names[t->id] = cand;
      assign_type_displays(t->body, dn);
      break;
    }
  }
}

std::string print_type_rec(const FTypeRef& t, const DisplayNames& dn, bool arrow_dom) {
  static const FTypeRef kNat = nat_f_type();
  static const FTypeRef kWord = word_f_type();
  if (t->kind != FType::Kind::Var) {
    if (type_equal(t, kNat)) return "N";
    if (type_equal(t, kWord)) return "W";
  }
  switch (t->kind) {
    case FType::Kind::Var:
      return dn.of(t->id, t->name);
    case FType::Kind::Arrow: {
      std::string s =
          print_type_rec(t->dom, dn, true) + " -> " + print_type_rec(t->cod, dn, false);
      return arrow_dom ? "(" + s + ")" : s;
    }
    case FType::Kind::Forall: {
      std::string s = "forall " + dn.of(t->id, t->name) + ". " + print_type_rec(t->body, dn, false);
      return arrow_dom ? "(" + s + ")" : s;
    }
  }
  return "?";
}

void collect_term_occurrences(const FTermRef& t, std::set<int>& inner_bound,
                              std::vector<std::pair<int, std::string>>& out) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      out.emplace_back(t->id, t->name);
      break;
    case FTerm::Kind::Lam:
      inner_bound.insert(t->id);
      collect_term_occurrences(t->body, inner_bound, out);
      break;
    case FTerm::Kind::App:
      collect_term_occurrences(t->fun, inner_bound, out);
      collect_term_occurrences(t->arg, inner_bound, out);
      break;
    case FTerm::Kind::TLam:
      collect_term_occurrences(t->body, inner_bound, out);
      break;
    case FTerm::Kind::TApp:
      collect_term_occurrences(t->fun, inner_bound, out);
      break;
  }
}

void collect_annot_occurrences(const FTermRef& t, std::set<int>& inner_bound,
                               std::vector<std::pair<int, std::string>>& out) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      break;
    case FTerm::Kind::Lam: {
      std::set<int> ib;
      collect_type_occurrences(t->annot, ib, out);
      collect_annot_occurrences(t->body, inner_bound, out);
      break;
    }
    case FTerm::Kind::App:
      collect_annot_occurrences(t->fun, inner_bound, out);
      collect_annot_occurrences(t->arg, inner_bound, out);
      break;
    case FTerm::Kind::TLam:
      inner_bound.insert(t->id);
      collect_annot_occurrences(t->body, inner_bound, out);
      break;
    case FTerm::Kind::TApp: {
      std::set<int> ib;
      collect_type_occurrences(t->targ, ib, out);
      collect_annot_occurrences(t->fun, inner_bound, out);
      break;
    }
  }
}

bool term_scope_conflict(const FTermRef& body, int binder_id, const std::string& cand,
                         const DisplayNames& dn) {
  std::vector<std::pair<int, std::string>> occ;
  std::set<int> inner;
  collect_term_occurrences(body, inner, occ);
  for (auto& [id, nm] : occ) {
    if (id == binder_id || inner.count(id)) continue;
    if (dn.of(id, nm) == cand) return true;
  }
  return false;
}

bool tlam_scope_conflict(const FTermRef& body, int binder_id, const std::string& cand,
                         const DisplayNames& dn) {
  std::vector<std::pair<int, std::string>> occ;
  std::set<int> inner;
  collect_annot_occurrences(body, inner, occ);
  // type binders inside annotations are tracked per annotation
  for (auto& [id, nm] : occ) {
    if (id == binder_id || inner.count(id)) continue;
    if (dn.of(id, nm) == cand) return true;
  }
  return false;
}

void assign_term_displays(const FTermRef& t, DisplayNames& term_dn, DisplayNames& type_dn) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      break;
    case FTerm::Kind::Lam: {
      std::string cand = t->name;
      while (term_scope_conflict(t->body, t->id, cand, term_dn)) cand += '\'';
      term_dn.names[t->id] = cand;
      assign_type_displays(t->annot, type_dn);
      assign_term_displays(t->body, term_dn, type_dn);
      break;
    }
    case FTerm::Kind::App:
      assign_term_displays(t->fun, term_dn, type_dn);
      assign_term_displays(t->arg, term_dn, type_dn);
      break;
    case FTerm::Kind::TLam: {
      std::string cand = t->name;
      while (tlam_scope_conflict(t->body, t->id, cand, type_dn)) cand += '\'';
      type_dn.names[t->id] = cand;
      assign_term_displays(t->body, term_dn, type_dn);
      break;
    }
    case FTerm::Kind::TApp:
      assign_term_displays(t->fun, term_dn, type_dn);
      assign_type_displays(t->targ, type_dn);
      break;
  }
}

std::string print_term_rec(const FTermRef& t, const DisplayNames& term_dn,
                           const DisplayNames& type_dn) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      return term_dn.of(t->id, t->name);
    case FTerm::Kind::Lam:
      return "\\" + term_dn.of(t->id, t->name) + ":" + print_type_rec(t->annot, type_dn, false) +
             ". " + print_term_rec(t->body, term_dn, type_dn);
    case FTerm::Kind::TLam:
      return "/\\" + type_dn.of(t->id, t->name) + ". " + print_term_rec(t->body, term_dn, type_dn);
    case FTerm::Kind::App: {
      std::string f = print_term_rec(t->fun, term_dn, type_dn);
      if (t->fun->kind == FTerm::Kind::Lam || t->fun->kind == FTerm::Kind::TLam) f = "(" + f + ")";
      std::string a = print_term_rec(t->arg, term_dn, type_dn);
      if (t->arg->kind != FTerm::Kind::Var) a = "(" + a + ")";
      return f + " " + a;
    }
    case FTerm::Kind::TApp: {
      std::string f = print_term_rec(t->fun, term_dn, type_dn);
      if (t->fun->kind == FTerm::Kind::Lam || t->fun->kind == FTerm::Kind::TLam) f = "(" + f + ")";
      return f + " [" + print_type_rec(t->targ, type_dn, false) + "]";
    }
  }
  return "?";
}

}  // namespace

std::string print_type(const FTypeRef& t) {
  DisplayNames dn;
  assign_type_displays(t, dn);
  return print_type_rec(t, dn, false);
}

std::string print_term(const FTermRef& t) {
  DisplayNames term_dn, type_dn;
  assign_term_displays(t, term_dn, type_dn);
  return print_term_rec(t, term_dn, type_dn);
}

// -------- type checking --------

namespace {

FTypeRef typecheck_rec(const FTermRef& t) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      return t->annot;
    case FTerm::Kind::Lam:
      return tarrow(t->annot, typecheck_rec(t->body));
    case FTerm::Kind::App: {
      FTypeRef f = typecheck_rec(t->fun);
      FTypeRef a = typecheck_rec(t->arg);
      if (f->kind != FType::Kind::Arrow)
        throw TypeError("application of a non-function: " + print_type(f));
      if (!type_equal(f->dom, a))
        throw TypeError("type mismatch at application: expected " + print_type(f->dom) +
                        ", got " + print_type(a));
      return f->cod;
    }
    case FTerm::Kind::TLam: {
      for (const FTerm* v : free_term_vars(t->body)) {
        if (type_has_free_name(v->annot, t->name))
          throw TypeError("eigenvariable condition violated: '" + t->name +
                          "' occurs in the type of free variable '" + v->name + "'");
      }
      return tforall(t->name, t->id, typecheck_rec(t->body));
    }
    case FTerm::Kind::TApp: {
      FTypeRef f = typecheck_rec(t->fun);
      if (f->kind != FType::Kind::Forall)
        throw TypeError("type application of a non-polymorphic term: " + print_type(f));
      return subst_type(f->body, f->id, t->targ);
    }
  }
  throw TypeError("malformed term");
}

}  // namespace

FTypeRef typecheck(const FTermRef& t) { return typecheck_rec(t); }

int term_size(const FTermRef& t) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      return 1;
    case FTerm::Kind::Lam:
    case FTerm::Kind::TLam:
      return 1 + term_size(t->body);
    case FTerm::Kind::App:
      return 1 + term_size(t->fun) + term_size(t->arg);
    case FTerm::Kind::TApp:
      return 1 + term_size(t->fun);
  }
  return 0;
}

namespace {

void free_vars_rec(const FTermRef& t, std::set<int>& bound, std::vector<const FTerm*>& out) {
  switch (t->kind) {
    case FTerm::Kind::Var:
      if (!bound.count(t->id)) out.push_back(t.get());
      break;
    case FTerm::Kind::Lam: {
      bound.insert(t->id);
      free_vars_rec(t->body, bound, out);
      bound.erase(t->id);
      break;
    }
    case FTerm::Kind::App:
      free_vars_rec(t->fun, bound, out);
      free_vars_rec(t->arg, bound, out);
      break;
    case FTerm::Kind::TLam:
      free_vars_rec(t->body, bound, out);
      break;
    case FTerm::Kind::TApp:
      free_vars_rec(t->fun, bound, out);
      break;
  }
}

bool term_equal_rec(const FTermRef& a, const FTermRef& b, std::vector<std::pair<int, int>>& tcorr,
                    std::vector<std::pair<int, int>>& vcorr) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FTerm::Kind::Var: {
      int m;
      if (corr_lookup(vcorr, a->id, m)) return m == b->id;
      int m2;
      if (corr_lookup_right(vcorr, b->id, m2)) return false;
      return a->name == b->name;
    }
    case FTerm::Kind::Lam: {
      if (!type_equal_rec(a->annot, b->annot, tcorr)) return false;
      vcorr.emplace_back(a->id, b->id);
      bool r = term_equal_rec(a->body, b->body, tcorr, vcorr);
      vcorr.pop_back();
      return r;
    }
    case FTerm::Kind::App:
      return term_equal_rec(a->fun, b->fun, tcorr, vcorr) &&
             term_equal_rec(a->arg, b->arg, tcorr, vcorr);
    case FTerm::Kind::TLam: {
      tcorr.emplace_back(a->id, b->id);
      bool r = term_equal_rec(a->body, b->body, tcorr, vcorr);
      tcorr.pop_back();
      return r;
    }
    case FTerm::Kind::TApp:
      return type_equal_rec(a->targ, b->targ, tcorr) && term_equal_rec(a->fun, b->fun, tcorr, vcorr);
  }
  return false;
}

}  // namespace

std::vector<const FTerm*> free_term_vars(const FTermRef& t) {
  std::set<int> bound;
  std::vector<const FTerm*> out;
  free_vars_rec(t, bound, out);
  return out;
}

bool term_equal(const FTermRef& a, const FTermRef& b) {
  std::vector<std::pair<int, int>> tcorr, vcorr;
  return term_equal_rec(a, b, tcorr, vcorr);
}

FTypeRef nat_f_type() {
  auto v = [] { return tvar("a", -1); };
  return tforall("a", -1, tarrow(tarrow(v(), v()), tarrow(v(), v())));
}

FTypeRef word_f_type() {
  auto v = [] { return tvar("a", -1); };
  auto aa = [&] { return tarrow(v(), v()); };
  return tforall("a", -1, tarrow(aa(), tarrow(aa(), aa())));
}

}  // namespace dlal
