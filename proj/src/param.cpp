#include "dlal/param.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>

namespace dlal {

// -------- ParamPool --------

int ParamPool::fresh_bool(std::string origin) {
  int id = size();
  params_.push_back({ParamKind::Bool, ++nb_, std::move(origin)});
  by_name_.emplace(name(id), id);
  return id;
}

int ParamPool::fresh_exp(std::string origin) {
  int id = size();
  params_.push_back({ParamKind::Exp, ++nn_, std::move(origin)});
  by_name_.emplace(name(id), id);
  return id;
}

int ParamPool::fresh_door(std::string origin) {
  int id = size();
  params_.push_back({ParamKind::Door, ++nm_, std::move(origin)});
  by_name_.emplace(name(id), id);
  return id;
}

int ParamPool::register_named(const std::string& name, std::string origin) {
  if (auto id = find(name)) return *id;
  if (name.size() < 2 || (name[0] != 'b' && name[0] != 'n' && name[0] != 'm'))
    throw std::runtime_error("bad parameter name '" + name + "'");
  int idx = std::atoi(name.c_str() + 1);
  ParamKind k = name[0] == 'b' ? ParamKind::Bool : name[0] == 'n' ? ParamKind::Exp : ParamKind::Door;
  int id = size();
  params_.push_back({k, idx, std::move(origin), name});
  if (k == ParamKind::Bool) ++nb_;
  if (k == ParamKind::Exp) ++nn_;
  if (k == ParamKind::Door) ++nm_;
  by_name_.emplace(name, id);
  return id;
}

std::string ParamPool::name(int id) const {
  const ParamInfo& p = params_.at(id);
  if (!p.explicit_name.empty()) return p.explicit_name;
  switch (p.kind) {
    case ParamKind::Bool: return "b" + std::to_string(p.index);
    case ParamKind::Exp: return "n" + std::to_string(p.index);
    case ParamKind::Door: return "m" + std::to_string(p.index);
  }
  return "?";
}

std::optional<int> ParamPool::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ParamPool::ids_of(ParamKind k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (params_[i].kind == k) out.push_back(i);
  return out;
}

// -------- LinComb --------

LinComb LinComb::of(int param, int coeff) {
  LinComb c;
  if (coeff != 0) c.terms.emplace_back(param, coeff);
  return c;
}

LinComb LinComb::plus(const LinComb& o) const {
  LinComb r;
  size_t i = 0, j = 0;
  while (i < terms.size() || j < o.terms.size()) {
    if (j >= o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
      r.terms.push_back(terms[i++]);
    } else if (i >= terms.size() || o.terms[j].first < terms[i].first) {
      r.terms.push_back(o.terms[j++]);
    } else {
      int c = terms[i].second + o.terms[j].second;
      if (c != 0) r.terms.emplace_back(terms[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

LinComb LinComb::plus(int param, int coeff) const { return plus(LinComb::of(param, coeff)); }

LinComb LinComb::minus(const LinComb& o) const {
  LinComb neg;
  neg.terms.reserve(o.terms.size());
  for (auto& [p, c] : o.terms) neg.terms.emplace_back(p, -c);
  return plus(neg);
}

std::string LinComb::key() const {
  std::string s;
  for (auto& [p, c] : terms) {
    s += std::to_string(p);
    s += ':';
    s += std::to_string(c);
    s += ';';
  }
  return s;
}

long long LinComb::eval(const std::map<int, long long>& vals) const {
  long long s = 0;
  for (auto& [p, c] : terms) s += c * vals.at(p);
  return s;
}

int Instantiation::boolv(int id) const {
  auto it = bools.find(id);
  if (it == bools.end()) throw std::runtime_error("instantiation missing boolean parameter");
  return it->second;
}

long long Instantiation::intv(int id) const {
  auto it = ints.find(id);
  if (it == ints.end()) throw std::runtime_error("instantiation missing integer parameter");
  return it->second;
}

long long Instantiation::eval(const LinComb& c) const {
  long long s = 0;
  for (auto& [p, k] : c.terms) s += k * intv(p);
  return s;
}

std::string print_comb(const LinComb& c, const ParamPool& pool) {
  if (c.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [p, k] : c.terms) {
    if (first) {
      if (k < 0) s += "-";
      first = false;
    } else {
      s += k < 0 ? " - " : " + ";
    }
    int a = std::abs(k);
    if (a != 1) s += std::to_string(a) + " ";
    s += pool.name(p);
  }
  return s;
}

// -------- parameterized types --------

PTypeFRef pvar(std::string name, int id) {
  auto t = std::make_shared<PTypeNode>();
  t->kind = PTypeNode::Kind::Var;
  t->name = std::move(name);
  t->id = id;
  return t;
}

PTypeFRef parrow(BangPType dom, LinearPType cod) {
  auto t = std::make_shared<PTypeNode>();
  t->kind = PTypeNode::Kind::Arrow;
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

PTypeFRef pforall(std::string name, int id, LinearPType body) {
  auto t = std::make_shared<PTypeNode>();
  t->kind = PTypeNode::Kind::Forall;
  t->name = std::move(name);
  t->id = id;
  t->body = std::move(body);
  return t;
}

namespace {

FTypeRef erase_f(const PTypeFRef& f) {
  switch (f->kind) {
    case PTypeNode::Kind::Var:
      return tvar(f->name, f->id);
    case PTypeNode::Kind::Arrow:
      return tarrow(erase(f->dom), erase(f->cod));
    case PTypeNode::Kind::Forall:
      return tforall(f->name, f->id, erase(f->body));
  }
  return nullptr;
}

}  // namespace

FTypeRef erase(const LinearPType& a) { return erase_f(a.body); }
FTypeRef erase(const BangPType& a) { return erase_f(a.body); }

LinearPType degree(const BangPType& d) { return {d.exps, d.body}; }

namespace {

PTypeFRef decorate_f(const FTypeRef& t, ParamPool& pool, const std::string& origin) {
  switch (t->kind) {
    case FType::Kind::Var:
      return pvar(t->name, t->id);
    case FType::Kind::Arrow:
      return parrow(free_bang_decoration(t->dom, pool, origin),
                    free_linear_decoration(t->cod, pool, origin));
    case FType::Kind::Forall:
      return pforall(t->name, t->id, free_linear_decoration(t->body, pool, origin));
  }
  return nullptr;
}

}  // namespace

LinearPType free_linear_decoration(const FTypeRef& t, ParamPool& pool, const std::string& origin) {
  int n = pool.fresh_exp(origin);
  return {LinComb::of(n), decorate_f(t, pool, origin)};
}

BangPType free_bang_decoration(const FTypeRef& t, ParamPool& pool, const std::string& origin) {
  int b = pool.fresh_bool(origin);
  int n = pool.fresh_exp(origin);
  return {b, LinComb::of(n), decorate_f(t, pool, origin)};
}

namespace {

PTypeFRef subst_f(const PTypeFRef& f, int var_id, const LinearPType& a);

LinearPType subst_linear(const LinearPType& b, int var_id, const LinearPType& a) {
  if (b.body->kind == PTypeNode::Kind::Var && b.body->id == var_id)
    return {b.exps.plus(a.exps), a.body};
  return {b.exps, subst_f(b.body, var_id, a)};
}

BangPType subst_bang(const BangPType& b, int var_id, const LinearPType& a) {
  if (b.body->kind == PTypeNode::Kind::Var && b.body->id == var_id)
    return {b.bang, b.exps.plus(a.exps), a.body};
  return {b.bang, b.exps, subst_f(b.body, var_id, a)};
}

PTypeFRef subst_f(const PTypeFRef& f, int var_id, const LinearPType& a) {
  switch (f->kind) {
    case PTypeNode::Kind::Var:
      return f;  // non-matching variable
    case PTypeNode::Kind::Arrow:
      return parrow(subst_bang(f->dom, var_id, a), subst_linear(f->cod, var_id, a));
    case PTypeNode::Kind::Forall:
      if (f->id == var_id) return f;
      return pforall(f->name, f->id, subst_linear(f->body, var_id, a));
  }
  return f;
}

}  // namespace

LinearPType ptype_subst(const LinearPType& b, int var_id, const LinearPType& a) {
  return subst_linear(b, var_id, a);
}

namespace {

void adm_f(const PTypeFRef& f, ConstraintSet& out, const std::string& origin);

}  // namespace

void adm_constraints(const LinearPType& e, ConstraintSet& out, const std::string& origin) {
  Constraint c = lin_geq0(e.exps, origin);
  c.family = Family::Ltype;
  out.add(c);
  adm_f(e.body, out, origin);
}

void adm_constraints(const BangPType& e, ConstraintSet& out, const std::string& origin) {
  Constraint c = lin_geq0(e.exps, origin);
  c.family = Family::Ltype;
  out.add(c);
  Constraint m = mixed_geq1(e.bang, e.exps, origin);
  m.family = Family::Ltype;
  out.add(m);
  adm_f(e.body, out, origin);
}

namespace {

void adm_f(const PTypeFRef& f, ConstraintSet& out, const std::string& origin) {
  switch (f->kind) {
    case PTypeNode::Kind::Var:
      break;
    case PTypeNode::Kind::Arrow:
      adm_constraints(f->dom, out, origin);
      adm_constraints(f->cod, out, origin);
      break;
    case PTypeNode::Kind::Forall:
      adm_constraints(f->body, out, origin);
      break;
  }
}

std::string print_pf(const PTypeFRef& f, const ParamPool& pool) {
  switch (f->kind) {
    case PTypeNode::Kind::Var:
      return f->name;
    case PTypeNode::Kind::Arrow:
      return "(" + print_ptype(f->dom, pool) + " -o " + print_ptype(f->cod, pool) + ")";
    case PTypeNode::Kind::Forall:
      return "(forall " + f->name + ". " + print_ptype(f->body, pool) + ")";
  }
  return "?";
}

}  // namespace

std::string print_ptype(const LinearPType& a, const ParamPool& pool) {
  std::string c;
  for (auto& [p, k] : a.exps.terms) {
    for (int i = 0; i < k; ++i) {
      if (!c.empty()) c += "+";
      c += pool.name(p);
    }
  }
  if (c.empty()) c = "0";
  return "$^{" + c + "}" + print_pf(a.body, pool);
}

std::string print_ptype(const BangPType& a, const ParamPool& pool) {
  std::string c;
  for (auto& [p, k] : a.exps.terms) {
    for (int i = 0; i < k; ++i) {
      if (!c.empty()) c += "+";
      c += pool.name(p);
    }
  }
  if (c.empty()) c = "0";
  return "$^{" + pool.name(a.bang) + "," + c + "}" + print_pf(a.body, pool);
}

// -------- free decoration of terms --------

namespace {

struct DecorateCtx {
  ParamPool& pool;
  std::map<int, BangPType> vars;  // binder id -> decoration
};

PTermRef decorate_rec(const FTermRef& m, DecorateCtx& cx, const std::string& path) {
  auto node = std::make_shared<PTermNode>();
  node->path = path;
  switch (m->kind) {
    case FTerm::Kind::Var: {
      node->kind = PTermNode::Kind::Var;
      node->name = m->name;
      node->var_id = m->id;
      auto it = cx.vars.find(m->id);
      if (it == cx.vars.end()) {
        // free variable of an open term
        it = cx.vars.emplace(m->id, free_bang_decoration(m->annot, cx.pool, "var " + m->name)).first;
      }
      node->vtype = it->second;
      break;
    }
    case FTerm::Kind::Lam: {
      node->kind = PTermNode::Kind::Lam;
      node->name = m->name;
      node->var_id = m->id;
      auto it = cx.vars.find(m->id);
      if (it == cx.vars.end())
        it = cx.vars.emplace(m->id, free_bang_decoration(m->annot, cx.pool, "\\" + m->name + " at " + path)).first;
      node->vtype = it->second;
      node->body = decorate_rec(m->body, cx, path + ".0");
      break;
    }
    case FTerm::Kind::App:
      node->kind = PTermNode::Kind::App;
      node->fun = decorate_rec(m->fun, cx, path + ".0");
      node->arg = decorate_rec(m->arg, cx, path + ".1");
      break;
    case FTerm::Kind::TLam:
      node->kind = PTermNode::Kind::TLam;
      node->name = m->name;
      node->var_id = m->id;
      node->body = decorate_rec(m->body, cx, path + ".0");
      break;
    case FTerm::Kind::TApp:
      node->kind = PTermNode::Kind::TApp;
      node->fun = decorate_rec(m->fun, cx, path + ".0");
      node->targ = free_linear_decoration(m->targ, cx.pool, "targ at " + path);
      break;
  }
  node->door = cx.pool.fresh_door("door at " + path);
  return node;
}

}  // namespace

PTermRef free_decorate(const FTermRef& m, ParamPool& pool) {
  DecorateCtx cx{pool, {}};
  return decorate_rec(m, cx, "t");
}

FTermRef erase(const PTermRef& t) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      return mkvar(t->name, t->var_id, erase(t->vtype));
    case PTermNode::Kind::Lam:
      return mklam(t->name, t->var_id, erase(t->vtype), erase(t->body));
    case PTermNode::Kind::App:
      return mkapp(erase(t->fun), erase(t->arg));
    case PTermNode::Kind::TLam:
      return mktlam(t->name, t->var_id, erase(t->body));
    case PTermNode::Kind::TApp:
      return mktapp(erase(t->fun), erase(t->targ));
  }
  return nullptr;
}

int pterm_node_count(const PTermRef& t) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      return 1;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      return 1 + pterm_node_count(t->body);
    case PTermNode::Kind::App:
      return 1 + pterm_node_count(t->fun) + pterm_node_count(t->arg);
    case PTermNode::Kind::TApp:
      return 1 + pterm_node_count(t->fun);
  }
  return 0;
}

// -------- instantiation --------

namespace {

bool adm_check_f(const Instantiation& phi, const PTypeFRef& f, int* offending);

bool adm_check(const Instantiation& phi, const LinearPType& e, int* offending) {
  if (phi.eval(e.exps) < 0) {
    if (offending && !e.exps.terms.empty()) *offending = e.exps.terms.front().first;
    return false;
  }
  return adm_check_f(phi, e.body, offending);
}

bool adm_check(const Instantiation& phi, const BangPType& e, int* offending) {
  long long c = phi.eval(e.exps);
  if (c < 0) {
    if (offending && !e.exps.terms.empty()) *offending = e.exps.terms.front().first;
    return false;
  }
  if (phi.boolv(e.bang) == 1 && c < 1) {
    if (offending) *offending = e.bang;
    return false;
  }
  return adm_check_f(phi, e.body, offending);
}

bool adm_check_f(const Instantiation& phi, const PTypeFRef& f, int* offending) {
  switch (f->kind) {
    case PTypeNode::Kind::Var:
      return true;
    case PTypeNode::Kind::Arrow:
      return adm_check(phi, f->dom, offending) && adm_check(phi, f->cod, offending);
    case PTypeNode::Kind::Forall:
      return adm_check(phi, f->body, offending);
  }
  return true;
}

StarRef inst_f(const Instantiation& phi, const PTypeFRef& f);

}  // namespace

bool admissible(const Instantiation& phi, const LinearPType& e, int* offending) {
  return adm_check(phi, e, offending);
}

bool admissible(const Instantiation& phi, const BangPType& e, int* offending) {
  return adm_check(phi, e, offending);
}

StarRef instantiate_type(const Instantiation& phi, const LinearPType& e) {
  long long c = phi.eval(e.exps);
  if (c < 0)
    throw AdmissibilityError("negative exponent in instantiated type",
                             e.exps.terms.empty() ? -1 : e.exps.terms.front().first);
  return sparas(inst_f(phi, e.body), static_cast<int>(c));
}

StarD instantiate_type(const Instantiation& phi, const BangPType& e) {
  long long c = phi.eval(e.exps);
  if (c < 0)
    throw AdmissibilityError("negative exponent in instantiated type",
                             e.exps.terms.empty() ? -1 : e.exps.terms.front().first);
  if (phi.boolv(e.bang) == 1) {
    if (c < 1)
      throw AdmissibilityError("bang flag set with zero exponent", e.bang);
    return {sparas(inst_f(phi, e.body), static_cast<int>(c) - 1), true};
  }
  return {sparas(inst_f(phi, e.body), static_cast<int>(c)), false};
}

namespace {

StarRef inst_f(const Instantiation& phi, const PTypeFRef& f) {
  switch (f->kind) {
    case PTypeNode::Kind::Var:
      return svar(f->name, f->id);
    case PTypeNode::Kind::Arrow:
      return sarrow(instantiate_type(phi, f->dom), instantiate_type(phi, f->cod));
    case PTypeNode::Kind::Forall:
      return sforall(f->name, f->id, instantiate_type(phi, f->body));
  }
  return nullptr;
}

}  // namespace

PseudoRef instantiate_term(const Instantiation& phi, const PTermRef& t) {
  auto node = std::make_shared<PseudoNode>();
  node->door = static_cast<int>(phi.intv(t->door));
  node->path = t->path;
  node->name = t->name;
  node->var_id = t->var_id;
  switch (t->kind) {
    case PTermNode::Kind::Var:
      node->kind = PseudoNode::Kind::Var;
      node->vtype = instantiate_type(phi, t->vtype);
      break;
    case PTermNode::Kind::Lam:
      node->kind = PseudoNode::Kind::Lam;
      node->vtype = instantiate_type(phi, t->vtype);
      node->body = instantiate_term(phi, t->body);
      break;
    case PTermNode::Kind::App:
      node->kind = PseudoNode::Kind::App;
      node->fun = instantiate_term(phi, t->fun);
      node->arg = instantiate_term(phi, t->arg);
      break;
    case PTermNode::Kind::TLam:
      node->kind = PseudoNode::Kind::TLam;
      node->body = instantiate_term(phi, t->body);
      break;
    case PTermNode::Kind::TApp:
      node->kind = PseudoNode::Kind::TApp;
      node->fun = instantiate_term(phi, t->fun);
      node->targ = instantiate_type(phi, t->targ);
      break;
  }
  return node;
}

FTermRef erase(const PseudoRef& t) {
  switch (t->kind) {
    case PseudoNode::Kind::Var:
      return mkvar(t->name, t->var_id, erase(t->vtype.type));
    case PseudoNode::Kind::Lam:
      return mklam(t->name, t->var_id, erase(t->vtype.type), erase(t->body));
    case PseudoNode::Kind::App:
      return mkapp(erase(t->fun), erase(t->arg));
    case PseudoNode::Kind::TLam:
      return mktlam(t->name, t->var_id, erase(t->body));
    case PseudoNode::Kind::TApp:
      return mktapp(erase(t->fun), erase(t->targ));
  }
  return nullptr;
}

namespace {

std::string pseudo_rec(const PseudoRef& t) {
  std::string inner;
  bool atom = false;
  switch (t->kind) {
    case PseudoNode::Kind::Var:
      inner = t->name;
      atom = true;
      break;
    case PseudoNode::Kind::Lam:
      inner = "\\" + t->name + ":" + print_star(t->vtype) + ". " + pseudo_rec(t->body);
      break;
    case PseudoNode::Kind::App: {
      std::string f = pseudo_rec(t->fun);
      if (t->fun->kind == PseudoNode::Kind::Lam || t->fun->kind == PseudoNode::Kind::TLam ||
          t->fun->door != 0)
        f = "(" + f + ")";
      std::string a = pseudo_rec(t->arg);
      if (!(t->arg->kind == PseudoNode::Kind::Var && t->arg->door == 0)) a = "(" + a + ")";
      inner = f + " " + a;
      break;
    }
    case PseudoNode::Kind::TLam:
      inner = "/\\" + t->name + ". " + pseudo_rec(t->body);
      break;
    case PseudoNode::Kind::TApp: {
      std::string f = pseudo_rec(t->fun);
      if (t->fun->kind == PseudoNode::Kind::Lam || t->fun->kind == PseudoNode::Kind::TLam ||
          t->fun->door != 0)
        f = "(" + f + ")";
      inner = f + " [" + print_star(t->targ) + "]";
      break;
    }
  }
  if (t->door == 0) return inner;
  std::string d = "$^{" + std::to_string(t->door) + "}";
  return atom ? d + inner : d + "(" + inner + ")";
}

}  // namespace

std::string print_pseudo(const PseudoRef& t) { return pseudo_rec(t); }

// -------- dump format --------

namespace {

void dump_rec(const PTermRef& t, const ParamPool& pool, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  std::string door = "^" + pool.name(t->door);
  switch (t->kind) {
    case PTermNode::Kind::Var:
      out += "var " + door + " " + t->name + " : " + print_ptype(t->vtype, pool) + "\n";
      break;
    case PTermNode::Kind::Lam:
      out += "lam " + door + " " + t->name + " : " + print_ptype(t->vtype, pool) + "\n";
      dump_rec(t->body, pool, depth + 1, out);
      break;
    case PTermNode::Kind::App:
      out += "app " + door + "\n";
      dump_rec(t->fun, pool, depth + 1, out);
      dump_rec(t->arg, pool, depth + 1, out);
      break;
    case PTermNode::Kind::TLam:
      out += "tlam " + door + " " + t->name + "\n";
      dump_rec(t->body, pool, depth + 1, out);
      break;
    case PTermNode::Kind::TApp:
      out += "tapp " + door + " : " + print_ptype(t->targ, pool) + "\n";
      dump_rec(t->fun, pool, depth + 1, out);
      break;
  }
}

// minimal recursive-descent parser over the dump text
struct DumpParser {
  std::vector<std::pair<int, std::string>> lines;  // (depth, content)
  size_t pos = 0;
  ParamPool pool;
  int next_var_id = 1;
  std::vector<std::pair<std::string, int>> term_scope;   // name -> binder id
  std::vector<std::pair<std::string, int>> type_scope;
  std::map<std::string, int> free_names;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("pterm dump: " + msg);
  }

  int lookup_param(const std::string& name, const char* what) {
    if (name.empty()) fail(std::string("missing ") + what);
    return pool.register_named(name, "dump");
  }

  int type_var(const std::string& n) {
    for (auto it = type_scope.rbegin(); it != type_scope.rend(); ++it)
      if (it->first == n) return it->second;
    auto it = free_names.find(n);
    if (it != free_names.end()) return it->second;
    int id = next_var_id++;
    free_names.emplace(n, id);
    return id;
  }

  // type text parsing
  struct TCur {
    const std::string* s;
    size_t i = 0;
    char peek() const { return i < s->size() ? (*s)[i] : '\0'; }
    void skip() {
      while (i < s->size() && (*s)[i] == ' ') ++i;
    }
  };

  LinComb comb(TCur& c) {
    LinComb r;
    for (;;) {
      c.skip();
      size_t st = c.i;
      while (c.i < c.s->size() && (isalnum(static_cast<unsigned char>((*c.s)[c.i])))) ++c.i;
      std::string name = c.s->substr(st, c.i - st);
      if (name.empty()) fail("bad combination");
      if (name != "0") r = r.plus(lookup_param(name, "exponent"));
      c.skip();
      if (c.peek() == '+') {
        ++c.i;
        continue;
      }
      break;
    }
    return r;
  }

  std::string ident(TCur& c) {
    c.skip();
    size_t st = c.i;
    while (c.i < c.s->size() &&
           (isalnum(static_cast<unsigned char>((*c.s)[c.i])) || (*c.s)[c.i] == '_' || (*c.s)[c.i] == '\''))
      ++c.i;
    if (st == c.i) fail("expected identifier in type");
    return c.s->substr(st, c.i - st);
  }

  void expect(TCur& c, const std::string& tok) {
    c.skip();
    if (c.s->compare(c.i, tok.size(), tok) != 0) fail("expected '" + tok + "' in type");
    c.i += tok.size();
  }

  PTypeFRef type_f(TCur& c) {
    c.skip();
    if (c.peek() == '(') {
      ++c.i;
      c.skip();
      if (c.s->compare(c.i, 6, "forall") == 0) {
        c.i += 6;
        std::string n = ident(c);
        expect(c, ".");
        int id = next_var_id++;
        type_scope.emplace_back(n, id);
        LinearPType b = linear(c);
        type_scope.pop_back();
        expect(c, ")");
        return pforall(n, id, b);
      }
      BangPType d = bang(c);
      expect(c, "-o");
      LinearPType a = linear(c);
      expect(c, ")");
      return parrow(d, a);
    }
    std::string n = ident(c);
    return pvar(n, type_var(n));
  }

  LinearPType linear(TCur& c) {
    expect(c, "$^{");
    LinComb e = comb(c);
    expect(c, "}");
    return {e, type_f(c)};
  }

  BangPType bang(TCur& c) {
    expect(c, "$^{");
    c.skip();
    size_t st = c.i;
    while (c.i < c.s->size() && isalnum(static_cast<unsigned char>((*c.s)[c.i]))) ++c.i;
    std::string bn = c.s->substr(st, c.i - st);
    int b = lookup_param(bn, "bang");
    expect(c, ",");
    LinComb e = comb(c);
    expect(c, "}");
    return {b, e, type_f(c)};
  }

  PTermRef node() {
    if (pos >= lines.size()) fail("unexpected end of dump");
    auto [depth, content] = lines[pos];
    ++pos;
    std::istringstream ss(content);
    std::string kind, door;
    ss >> kind >> door;
    if (door.empty() || door[0] != '^') fail("missing door annotation in '" + content + "'");
    auto n = std::make_shared<PTermNode>();
    n->door = lookup_param(door.substr(1), "door");
    n->path = "dump";
    auto rest_after = [&](const std::string& upto) {
      size_t p = content.find(upto);
      return p == std::string::npos ? std::string() : content.substr(p + upto.size());
    };
    if (kind == "var" || kind == "lam") {
      std::string name;
      ss >> name;
      n->name = name;
      std::string ty = rest_after(" : ");
      if (ty.empty()) fail("missing type on " + kind);
      TCur c{&ty};
      if (kind == "var") {
        n->kind = PTermNode::Kind::Var;
        for (auto it = term_scope.rbegin(); it != term_scope.rend(); ++it)
          if (it->first == name) {
            n->var_id = it->second;
            break;
          }
        if (n->var_id == 0) n->var_id = next_var_id++;  // free variable
        n->vtype = bang(c);
      } else {
        n->kind = PTermNode::Kind::Lam;
        n->var_id = next_var_id++;
        n->vtype = bang(c);
        term_scope.emplace_back(name, n->var_id);
        n->body = child(depth);
        term_scope.pop_back();
      }
    } else if (kind == "app") {
      n->kind = PTermNode::Kind::App;
      n->fun = child(depth);
      n->arg = child(depth);
    } else if (kind == "tlam") {
      std::string name;
      ss >> name;
      n->kind = PTermNode::Kind::TLam;
      n->name = name;
      n->var_id = next_var_id++;
      type_scope.emplace_back(name, n->var_id);
      n->body = child(depth);
      type_scope.pop_back();
    } else if (kind == "tapp") {
      n->kind = PTermNode::Kind::TApp;
      std::string ty = rest_after(" : ");
      if (ty.empty()) fail("missing type on tapp");
      TCur c{&ty};
      n->targ = linear(c);
      n->fun = child(depth);
    } else {
      fail("unknown node kind '" + kind + "'");
    }
    return n;
  }

  PTermRef child(int parent_depth) {
    if (pos >= lines.size() || lines[pos].first != parent_depth + 1)
      fail("expected a child node");
    return node();
  }
};

}  // namespace

std::string dump_pterm(const PTermRef& t, const ParamPool& pool) {
  std::string out;
  dump_rec(t, pool, 0, out);
  return out;
}

PTermDump parse_pterm_dump(const std::string& text) {
  DumpParser p;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    std::string content = line.substr(indent);
    if (content.empty() || content[0] == '#') continue;
    p.lines.emplace_back(static_cast<int>(indent / 2), content);
  }
  if (p.lines.empty()) throw std::runtime_error("pterm dump: empty input");
  PTermRef t = p.node();
  if (p.pos != p.lines.size()) p.fail("trailing lines");
  return {t, std::move(p.pool)};
}

Instantiation parse_instantiation(const std::string& text, const ParamPool& pool) {
  Instantiation phi;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string name, eq;
    long long val;
    if (!(ls >> name)) continue;
    if (!(ls >> eq >> val) || eq != "=")
      throw std::runtime_error("instantiation line " + std::to_string(lineno) +
                               ": expected 'param = value'");
    auto id = pool.find(name);
    if (!id)
      throw std::runtime_error("instantiation line " + std::to_string(lineno) +
                               ": unknown parameter '" + name + "'");
    if (pool.info(*id).kind == ParamKind::Bool) {
      if (val != 0 && val != 1)
        throw std::runtime_error("boolean parameter '" + name + "' must be 0 or 1");
      phi.bools[*id] = static_cast<int>(val);
    } else {
      phi.ints[*id] = val;
    }
  }
  return phi;
}

}  // namespace dlal
