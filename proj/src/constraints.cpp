#include "dlal/constraints.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dlal {

// -------- Constraint / ConstraintSet --------

const char* family_name(Family f) {
  switch (f) {
    case Family::Ltype: return "ltype";
    case Family::Bracket: return "bracket";
    case Family::Bang: return "bang";
    case Family::Scope: return "scope";
    case Family::Data: return "data";
    case Family::Other: return "other";
  }
  return "?";
}

bool Constraint::trivially_true() const {
  switch (kind) {
    case Kind::BoolEq:
      return b1 == b2;
    case Kind::BoolImp:
      return b1 == b2;
    case Kind::BoolConst:
      return false;
    case Kind::LinEq:
      return lhs == rhs;
    case Kind::LinGeq0:
    case Kind::LinEq0:
    case Kind::MixedEq0:
      return lhs.is_zero();
    case Kind::MixedGeq1:  // b = 1 => 0 >= 1 forces b = 0, not trivial
    case Kind::LinGeq1:
      return false;
  }
  return false;
}

std::string Constraint::key() const {
  std::string s = std::to_string(static_cast<int>(kind));
  s += '|';
  s += std::to_string(b1);
  s += '|';
  s += std::to_string(b2);
  s += '|';
  s += std::to_string(bval);
  s += '|';
  s += lhs.key();
  s += '|';
  s += rhs.key();
  return s;
}

Constraint bool_eq(int b1, int b2, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::BoolEq;
  c.b1 = std::min(b1, b2);
  c.b2 = std::max(b1, b2);
  c.origin = std::move(origin);
  return c;
}

Constraint bool_const(int b, int v, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::BoolConst;
  c.b1 = b;
  c.bval = v;
  c.origin = std::move(origin);
  return c;
}

Constraint bool_imp(int b1, int b2, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::BoolImp;
  c.b1 = b1;
  c.b2 = b2;
  c.origin = std::move(origin);
  return c;
}

Constraint lin_eq(LinComb l, LinComb r, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::LinEq;
  if (r.key() < l.key()) std::swap(l, r);
  c.lhs = std::move(l);
  c.rhs = std::move(r);
  c.origin = std::move(origin);
  return c;
}

Constraint lin_geq0(LinComb l, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::LinGeq0;
  c.lhs = std::move(l);
  c.origin = std::move(origin);
  return c;
}

Constraint lin_eq0(LinComb l, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::LinEq0;
  c.lhs = std::move(l);
  c.origin = std::move(origin);
  return c;
}

Constraint mixed_eq0(int b, LinComb l, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::MixedEq0;
  c.b1 = b;
  c.lhs = std::move(l);
  c.origin = std::move(origin);
  return c;
}

Constraint mixed_geq1(int b, LinComb l, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::MixedGeq1;
  c.b1 = b;
  c.lhs = std::move(l);
  c.origin = std::move(origin);
  return c;
}

Constraint lin_geq1(LinComb l, std::string origin) {
  Constraint c;
  c.kind = Constraint::Kind::LinGeq1;
  c.lhs = std::move(l);
  c.origin = std::move(origin);
  return c;
}

bool ConstraintSet::add(Constraint c) {
  if (c.trivially_true()) return false;
  if (!seen_.insert(c.key()).second) return false;
  items_.push_back(std::move(c));
  return true;
}

void ConstraintSet::merge(const ConstraintSet& other) {
  for (const Constraint& c : other.items()) add(c);
}

std::string print_constraint(const Constraint& c, const ParamPool& pool) {
  using K = Constraint::Kind;
  switch (c.kind) {
    case K::BoolEq:
      return "B " + pool.name(c.b1) + " = " + pool.name(c.b2);
    case K::BoolConst:
      return "B " + pool.name(c.b1) + " = " + std::to_string(c.bval);
    case K::BoolImp:
      return "B " + pool.name(c.b1) + " -> " + pool.name(c.b2) + " = 1";
    case K::LinEq:
      return "L " + print_comb(c.lhs, pool) + " = " + print_comb(c.rhs, pool);
    case K::LinGeq0:
      return "L " + print_comb(c.lhs, pool) + " >= 0";
    case K::LinEq0:
      return "L " + print_comb(c.lhs, pool) + " = 0";
    case K::MixedEq0:
      return "M " + pool.name(c.b1) + " -> " + print_comb(c.lhs, pool) + " = 0";
    case K::MixedGeq1:
      return "M " + pool.name(c.b1) + " -> " + print_comb(c.lhs, pool) + " >= 1";
    case K::LinGeq1:
      return "L " + print_comb(c.lhs, pool) + " >= 1";
  }
  return "?";
}

std::string dump_constraints(const ConstraintSet& s, const ParamPool& pool, bool origins) {
  std::string out;
  for (const Constraint& c : s.items()) {
    out += print_constraint(c, pool);
    if (origins) {
      out += " # origin: ";
      out += c.origin;
    }
    out += "\n";
  }
  return out;
}

// -------- Unif --------

namespace {

struct UnifWalk {
  ConstraintSet* out;
  const std::string* origin;

  void linear(const LinearPType& a, const LinearPType& b) {
    out->add(lin_eq(a.exps, b.exps, *origin));
    f(a.body, b.body);
  }

  void bang(const BangPType& a, const BangPType& b) {
    out->add(bool_eq(a.bang, b.bang, *origin));
    out->add(lin_eq(a.exps, b.exps, *origin));
    f(a.body, b.body);
  }

  void f(const PTypeFRef& a, const PTypeFRef& b) {
    if (a->kind != b->kind)
      throw std::logic_error("unif: erasure shapes differ (internal bug)");
    switch (a->kind) {
      case PTypeNode::Kind::Var:
        break;
      case PTypeNode::Kind::Arrow:
        bang(a->dom, b->dom);
        linear(a->cod, b->cod);
        break;
      case PTypeNode::Kind::Forall:
        linear(a->body, b->body);
        break;
    }
  }
};

ConstraintSet with_family(ConstraintSet s, Family f) {
  ConstraintSet out;
  for (Constraint c : s.items()) {
    c.family = f;
    out.add(std::move(c));
  }
  return out;
}

}  // namespace

ConstraintSet unif(const LinearPType& e1, const LinearPType& e2, const std::string& origin) {
  ConstraintSet out;
  UnifWalk w{&out, &origin};
  w.linear(e1, e2);
  return out;
}

ConstraintSet unif(const BangPType& e1, const BangPType& e2, const std::string& origin) {
  ConstraintSet out;
  UnifWalk w{&out, &origin};
  w.bang(e1, e2);
  return out;
}

// -------- local typing --------

namespace {

LinearPType lt_rec(const PTermRef& t, LocalTyping& out) {
  LinearPType inner;
  switch (t->kind) {
    case PTermNode::Kind::Var:
      inner = degree(t->vtype);
      {
        ConstraintSet adm;
        adm_constraints(t->vtype, adm, "adm " + t->name + " at " + t->path);
        out.mc.merge(adm);
      }
      break;
    case PTermNode::Kind::Lam: {
      LinearPType body_t = lt_rec(t->body, out);
      inner = {LinComb::zero(), parrow(t->vtype, body_t)};
      ConstraintSet adm;
      adm_constraints(t->vtype, adm, "adm \\" + t->name + " at " + t->path);
      out.mc.merge(adm);
      break;
    }
    case PTermNode::Kind::App: {
      LinearPType f_t = lt_rec(t->fun, out);
      LinearPType a_t = lt_rec(t->arg, out);
      if (f_t.body->kind != PTypeNode::Kind::Arrow)
        throw std::logic_error("local typing: application of non-arrow (internal bug)");
      Constraint c0 = lin_eq0(f_t.exps, "app at " + t->path);
      c0.family = Family::Ltype;
      out.mc.add(c0);
      out.mc.merge(with_family(
          unif(degree(f_t.body->dom), a_t, "unif at " + t->path), Family::Ltype));
      inner = f_t.body->cod;
      break;
    }
    case PTermNode::Kind::TLam: {
      LinearPType body_t = lt_rec(t->body, out);
      inner = {LinComb::zero(), pforall(t->name, t->var_id, body_t)};
      break;
    }
    case PTermNode::Kind::TApp: {
      LinearPType f_t = lt_rec(t->fun, out);
      if (f_t.body->kind != PTypeNode::Kind::Forall)
        throw std::logic_error("local typing: type application of non-forall (internal bug)");
      Constraint c0 = lin_eq0(f_t.exps, "tapp at " + t->path);
      c0.family = Family::Ltype;
      out.mc.add(c0);
      ConstraintSet adm;
      adm_constraints(t->targ, adm, "adm targ at " + t->path);
      out.mc.merge(adm);
      inner = ptype_subst(f_t.body->body, f_t.body->id, t->targ);
      break;
    }
  }
  out.inner_type[t.get()] = inner;
  LinearPType typed{inner.exps.plus(t->door), inner.body};
  Constraint dc = lin_geq0(typed.exps, "door at " + t->path);
  dc.family = Family::Ltype;
  out.mc.add(dc);
  out.node_type[t.get()] = typed;
  return typed;
}

}  // namespace

LocalTyping local_typing(const PTermRef& t) {
  LocalTyping out;
  out.root_type = lt_rec(t, out);
  return out;
}

namespace {

void count_occurrences(const PTermRef& t, std::map<int, std::vector<const PTermNode*>>& occ) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      occ[t->var_id].push_back(t.get());
      break;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      count_occurrences(t->body, occ);
      break;
    case PTermNode::Kind::App:
      count_occurrences(t->fun, occ);
      count_occurrences(t->arg, occ);
      break;
    case PTermNode::Kind::TApp:
      count_occurrences(t->fun, occ);
      break;
  }
}

}  // namespace

ConstraintSet ltype(const PTermRef& t, const LocalTyping& lt) {
  ConstraintSet out;
  out.merge(lt.mc);
  std::map<int, std::vector<const PTermNode*>> occ;
  count_occurrences(t, occ);
  for (auto& [id, nodes] : occ) {
    if (nodes.size() >= 2) {
      Constraint c = bool_const(nodes.front()->vtype.bang, 1,
                                "multiplicity of " + nodes.front()->name);
      c.family = Family::Ltype;
      out.add(c);
    }
  }
  return out;
}

// -------- doors words and brackets --------

namespace {

bool doors_rec(const PTermRef& t, const Position& u, DoorsWord& w) {
  if (t.get() == u.node) {
    if (u.inner) w.push_back(t->door);
    return true;
  }
  w.push_back(t->door);
  switch (t->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      if (doors_rec(t->body, u, w)) return true;
      break;
    case PTermNode::Kind::App:
      if (doors_rec(t->fun, u, w)) return true;
      if (doors_rec(t->arg, u, w)) return true;
      break;
    case PTermNode::Kind::TApp:
      if (doors_rec(t->fun, u, w)) return true;
      break;
  }
  w.pop_back();
  return false;
}

}  // namespace

DoorsWord doors(const PTermRef& t, const Position& u) {
  DoorsWord w;
  if (!doors_rec(t, u, w)) throw std::invalid_argument("doors: position not inside the term");
  return w;
}

LinComb word_sum(const DoorsWord& w, size_t prefix) {
  LinComb c;
  size_t n = std::min(prefix, w.size());
  for (size_t i = 0; i < n; ++i) c = c.plus(w[i]);
  return c;
}

ConstraintSet wbracket(const DoorsWord& w, const std::string& origin, Family fam) {
  ConstraintSet out;
  LinComb s;
  for (size_t i = 0; i < w.size(); ++i) {
    s = s.plus(w[i]);
    Constraint c = lin_geq0(s, origin);
    c.family = fam;
    out.add(c);
  }
  return out;
}

ConstraintSet bracket(const DoorsWord& w, const std::string& origin, Family fam) {
  ConstraintSet out = wbracket(w, origin, fam);
  Constraint c = lin_eq0(word_sum(w), origin);
  c.family = fam;
  out.add(c);
  return out;
}

// -------- Bracketing constraints --------

namespace {

void collect_lambda_bound(const PTermRef& t, std::set<int>& out) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
      out.insert(t->var_id);
      collect_lambda_bound(t->body, out);
      break;
    case PTermNode::Kind::TLam:
      collect_lambda_bound(t->body, out);
      break;
    case PTermNode::Kind::App:
      collect_lambda_bound(t->fun, out);
      collect_lambda_bound(t->arg, out);
      break;
    case PTermNode::Kind::TApp:
      collect_lambda_bound(t->fun, out);
      break;
  }
}

void collect_var_occurrences(const PTermRef& t, int var_id, std::vector<Position>& out) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      if (t->var_id == var_id) out.push_back({t.get(), true});
      break;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      collect_var_occurrences(t->body, var_id, out);
      break;
    case PTermNode::Kind::App:
      collect_var_occurrences(t->fun, var_id, out);
      collect_var_occurrences(t->arg, var_id, out);
      break;
    case PTermNode::Kind::TApp:
      collect_var_occurrences(t->fun, var_id, out);
      break;
  }
}

void collect_lams(const PTermRef& t, std::vector<PTermRef>& out) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
      out.push_back(t);
      collect_lams(t->body, out);
      break;
    case PTermNode::Kind::TLam:
      collect_lams(t->body, out);
      break;
    case PTermNode::Kind::App:
      collect_lams(t->fun, out);
      collect_lams(t->arg, out);
      break;
    case PTermNode::Kind::TApp:
      collect_lams(t->fun, out);
      break;
  }
}

void collect_free_occurrences(const PTermRef& t, std::set<int>& bound,
                              std::vector<const PTermNode*>& out) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      if (!bound.count(t->var_id)) out.push_back(t.get());
      break;
    case PTermNode::Kind::Lam: {
      bool fresh = bound.insert(t->var_id).second;
      collect_free_occurrences(t->body, bound, out);
      if (fresh) bound.erase(t->var_id);
      break;
    }
    case PTermNode::Kind::TLam:
      collect_free_occurrences(t->body, bound, out);
      break;
    case PTermNode::Kind::App:
      collect_free_occurrences(t->fun, bound, out);
      collect_free_occurrences(t->arg, bound, out);
      break;
    case PTermNode::Kind::TApp:
      collect_free_occurrences(t->fun, bound, out);
      break;
  }
}

}  // namespace

ConstraintSet bracket_constraints(const PTermRef& t) {
  ConstraintSet out;
  // (i) free variables of the whole term
  std::set<int> bound;
  std::vector<const PTermNode*> free_occ;
  collect_free_occurrences(t, bound, free_occ);
  for (const PTermNode* x : free_occ)
    out.merge(bracket(doors(t, {x, true}), "bracket (i) " + x->name + " at " + x->path));
  // (ii) per abstraction
  std::vector<PTermRef> lams;
  collect_lams(t, lams);
  for (const PTermRef& lam : lams) {
    out.merge(wbracket(doors(t, {lam.get(), true}),
                       "bracket (ii.a) \\" + lam->name + " at " + lam->path));
    std::vector<Position> occs;
    collect_var_occurrences(lam->body, lam->var_id, occs);
    for (const Position& o : occs)
      out.merge(bracket(doors(lam->body, o),
                        "bracket (ii.b) \\" + lam->name + " -> " + o.node->path));
  }
  return out;
}

// -------- Bang constraints --------

namespace {

// Enumerates positions of the subtree rooted at u (word relative to u) and
// emits the bang (ii) constraints. `free_occ` is the unique free occurrence
// node or null.
void bang_positions(const PTermRef& n, const PTermRef& u, int critical,
                    const PTermNode* free_occ, LinComb word, ConstraintSet& out,
                    const std::string& site) {
  // outer position $^m n... (doors of n not yet crossed)
  if (n != u) {
    Constraint c = mixed_geq1(critical, word, "bang (ii) at " + site + " -> " + n->path);
    c.family = Family::Bang;
    out.add(c);
  }
  LinComb inner = word.plus(n->door);
  if (n->kind == PTermNode::Kind::Var && n.get() == free_occ) {
    Constraint c = mixed_eq0(critical, inner, "bang (ii) " + n->name + " at " + site);
    c.family = Family::Bang;
    out.add(c);
  } else {
    Constraint c = mixed_geq1(critical, inner, "bang (ii) at " + site + " -> " + n->path);
    c.family = Family::Bang;
    out.add(c);
  }
  switch (n->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      bang_positions(n->body, u, critical, free_occ, inner, out, site);
      break;
    case PTermNode::Kind::App:
      bang_positions(n->fun, u, critical, free_occ, inner, out, site);
      bang_positions(n->arg, u, critical, free_occ, inner, out, site);
      break;
    case PTermNode::Kind::TApp:
      bang_positions(n->fun, u, critical, free_occ, inner, out, site);
      break;
  }
}

void collect_apps(const PTermRef& t, std::vector<PTermRef>& out) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      collect_apps(t->body, out);
      break;
    case PTermNode::Kind::App:
      out.push_back(t);
      collect_apps(t->fun, out);
      collect_apps(t->arg, out);
      break;
    case PTermNode::Kind::TApp:
      collect_apps(t->fun, out);
      break;
  }
}

}  // namespace

ConstraintSet bang_constraints(const PTermRef& t, const LocalTyping& lt) {
  ConstraintSet out;
  std::vector<PTermRef> apps;
  collect_apps(t, apps);
  for (const PTermRef& app : apps) {
    const LinearPType& fty = lt.node_type.at(app->fun.get());
    if (fty.body->kind != PTypeNode::Kind::Arrow)
      throw std::logic_error("bang: application of non-arrow (internal bug)");
    int critical = fty.body->dom.bang;
    const PTermRef& u = app->arg;
    std::string site = u->path;
    // (i) free variable occurrences of u
    std::set<int> bound;
    std::vector<const PTermNode*> occ;
    collect_free_occurrences(u, bound, occ);
    const PTermNode* unique_occ = nullptr;
    if (occ.size() >= 2) {
      Constraint c = bool_const(critical, 0, "bang (i) several free occurrences in " + site);
      c.family = Family::Bang;
      out.add(c);
    } else if (occ.size() == 1) {
      unique_occ = occ.front();
      Constraint c = bool_imp(critical, unique_occ->vtype.bang,
                              "bang (i) " + unique_occ->name + " free in " + site);
      c.family = Family::Bang;
      out.add(c);
    }
    // (ii) door-extreme positions of u
    bang_positions(u, u, critical, unique_occ, LinComb::zero(), out, site);
  }
  return out;
}

// -------- Scope constraints --------

namespace {

class FreePVars {
 public:
  const std::set<int>& of(const PTypeFRef& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    std::set<int> s;
    switch (f->kind) {
      case PTypeNode::Kind::Var:
        s.insert(f->id);
        break;
      case PTypeNode::Kind::Arrow: {
        const std::set<int>& d = of(f->dom.body);
        const std::set<int>& c = of(f->cod.body);
        s.insert(d.begin(), d.end());
        s.insert(c.begin(), c.end());
        break;
      }
      case PTypeNode::Kind::Forall: {
        s = of(f->body.body);
        s.erase(f->id);
        break;
      }
    }
    return memo_.emplace(f.get(), std::move(s)).first->second;
  }

 private:
  std::map<const PTypeNode*, std::set<int>> memo_;
};

void collect_tlams(const PTermRef& t, std::vector<PTermRef>& out) {
  switch (t->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
      collect_tlams(t->body, out);
      break;
    case PTermNode::Kind::TLam:
      out.push_back(t);
      collect_tlams(t->body, out);
      break;
    case PTermNode::Kind::App:
      collect_tlams(t->fun, out);
      collect_tlams(t->arg, out);
      break;
    case PTermNode::Kind::TApp:
      collect_tlams(t->fun, out);
      break;
  }
}

void scope_walk(const PTermRef& n, int alpha, const LocalTyping& lt, FreePVars& fv,
                std::vector<LinComb>& prefix, ConstraintSet& out, const std::string& site) {
  LinComb inner = (prefix.empty() ? LinComb::zero() : prefix.back()).plus(n->door);
  prefix.push_back(inner);
  // both layers of a node share the F body, so one dependence check covers both
  const LinearPType& ty = lt.inner_type.at(n.get());
  if (fv.of(ty.body).count(alpha)) {
    for (const LinComb& s : prefix) {
      Constraint c = lin_geq0(s, "scope " + site + " -> " + n->path);
      c.family = Family::Scope;
      out.add(c);
    }
  }
  switch (n->kind) {
    case PTermNode::Kind::Var:
      break;
    case PTermNode::Kind::Lam:
    case PTermNode::Kind::TLam:
      scope_walk(n->body, alpha, lt, fv, prefix, out, site);
      break;
    case PTermNode::Kind::App:
      scope_walk(n->fun, alpha, lt, fv, prefix, out, site);
      scope_walk(n->arg, alpha, lt, fv, prefix, out, site);
      break;
    case PTermNode::Kind::TApp:
      scope_walk(n->fun, alpha, lt, fv, prefix, out, site);
      break;
  }
  prefix.pop_back();
}

}  // namespace

ConstraintSet scope_constraints(const PTermRef& t, const LocalTyping& lt) {
  ConstraintSet out;
  FreePVars fv;
  std::vector<PTermRef> tlams;
  collect_tlams(t, tlams);
  for (const PTermRef& tl : tlams) {
    std::vector<LinComb> prefix;
    scope_walk(tl->body, tl->var_id, lt, fv, prefix, out, "/\\" + tl->name + " at " + tl->path);
  }
  return out;
}

// -------- Const and split --------

GenResult const_all(const PTermRef& t) {
  GenResult r;
  r.typing = local_typing(t);
  r.all.merge(ltype(t, r.typing));
  r.all.merge(bracket_constraints(t));
  r.all.merge(bang_constraints(t, r.typing));
  r.all.merge(scope_constraints(t, r.typing));
  for (const Constraint& c : r.all.items()) {
    switch (c.family) {
      case Family::Ltype: ++r.n_ltype; break;
      case Family::Bracket: ++r.n_bracket; break;
      case Family::Bang: ++r.n_bang; break;
      case Family::Scope: ++r.n_scope; break;
      default: break;
    }
  }
  return r;
}

SplitSets split(const ConstraintSet& s) {
  SplitSets out;
  using K = Constraint::Kind;
  for (const Constraint& c : s.items()) {
    switch (c.kind) {
      case K::BoolEq:
      case K::BoolConst:
      case K::BoolImp:
        out.bools.add(c);
        break;
      case K::LinEq:
      case K::LinGeq0:
      case K::LinEq0:
      case K::LinGeq1:
        out.linear.add(c);
        break;
      case K::MixedEq0:
      case K::MixedGeq1:
        out.mixed.add(c);
        break;
    }
  }
  return out;
}

}  // namespace dlal
