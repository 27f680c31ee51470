#include "dlal/dlal_types.hpp"

#include <algorithm>
#include <vector>

namespace dlal {

DlalRef dvar(std::string name, int id) {
  auto t = std::make_shared<DlalType>();
  t->kind = DlalType::Kind::Var;
  t->name = std::move(name);
  t->id = id;
  return t;
}

DlalRef dlolli(DlalRef a, DlalRef b) {
  auto t = std::make_shared<DlalType>();
  t->kind = DlalType::Kind::Lolli;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

DlalRef dimp(DlalRef a, DlalRef b) {
  auto t = std::make_shared<DlalType>();
  t->kind = DlalType::Kind::Imp;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

DlalRef dpara(DlalRef a) {
  auto t = std::make_shared<DlalType>();
  t->kind = DlalType::Kind::Para;
  t->body = std::move(a);
  return t;
}

DlalRef dforall(std::string name, int id, DlalRef body) {
  auto t = std::make_shared<DlalType>();
  t->kind = DlalType::Kind::Forall;
  t->name = std::move(name);
  t->id = id;
  t->body = std::move(body);
  return t;
}

StarRef svar(std::string name, int id) {
  auto t = std::make_shared<StarType>();
  t->kind = StarType::Kind::Var;
  t->name = std::move(name);
  t->id = id;
  return t;
}

StarRef sarrow(StarD dom, StarRef cod) {
  auto t = std::make_shared<StarType>();
  t->kind = StarType::Kind::Arrow;
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

StarRef sforall(std::string name, int id, StarRef body) {
  auto t = std::make_shared<StarType>();
  t->kind = StarType::Kind::Forall;
  t->name = std::move(name);
  t->id = id;
  t->body = std::move(body);
  return t;
}

StarRef spara(StarRef body) {
  auto t = std::make_shared<StarType>();
  t->kind = StarType::Kind::Para;
  t->body = std::move(body);
  return t;
}

StarRef sparas(StarRef body, int n) {
  StarRef t = std::move(body);
  for (int i = 0; i < n; ++i) t = spara(t);
  return t;
}

FTypeRef erase(const DlalRef& a) {
  switch (a->kind) {
    case DlalType::Kind::Var:
      return tvar(a->name, a->id);
    case DlalType::Kind::Lolli:
    case DlalType::Kind::Imp:
      return tarrow(erase(a->left), erase(a->right));
    case DlalType::Kind::Para:
      return erase(a->body);
    case DlalType::Kind::Forall:
      return tforall(a->name, a->id, erase(a->body));
  }
  return nullptr;
}

FTypeRef erase(const StarRef& a) {
  switch (a->kind) {
    case StarType::Kind::Var:
      return tvar(a->name, a->id);
    case StarType::Kind::Arrow:
      return tarrow(erase(a->dom.type), erase(a->cod));
    case StarType::Kind::Para:
      return erase(a->body);
    case StarType::Kind::Forall:
      return tforall(a->name, a->id, erase(a->body));
  }
  return nullptr;
}

StarRef star(const DlalRef& a) {
  switch (a->kind) {
    case DlalType::Kind::Var:
      return svar(a->name, a->id);
    case DlalType::Kind::Lolli:
      return sarrow({star(a->left), false}, star(a->right));
    case DlalType::Kind::Imp:
      return sarrow({star(a->left), true}, star(a->right));
    case DlalType::Kind::Para:
      return spara(star(a->body));
    case DlalType::Kind::Forall:
      return sforall(a->name, a->id, star(a->body));
  }
  return nullptr;
}

DlalRef unstar(const StarRef& a) {
  switch (a->kind) {
    case StarType::Kind::Var:
      return dvar(a->name, a->id);
    case StarType::Kind::Arrow: {
      DlalRef d = unstar(a->dom.type);
      DlalRef c = unstar(a->cod);
      return a->dom.bang ? dimp(d, c) : dlolli(d, c);
    }
    case StarType::Kind::Para:
      return dpara(unstar(a->body));
    case StarType::Kind::Forall:
      return dforall(a->name, a->id, unstar(a->body));
  }
  return nullptr;
}

int depth(const DlalRef& a) {
  switch (a->kind) {
    case DlalType::Kind::Var:
      return 0;
    case DlalType::Kind::Lolli:
      return std::max(depth(a->left), depth(a->right));
    case DlalType::Kind::Imp:
      return std::max(depth(a->left) + 1, depth(a->right));
    case DlalType::Kind::Para:
      return depth(a->body) + 1;
    case DlalType::Kind::Forall:
      return depth(a->body);
  }
  return 0;
}

namespace {

bool pi1_rec(const DlalRef& a, bool positive) {
  switch (a->kind) {
    case DlalType::Kind::Var:
      return true;
    case DlalType::Kind::Lolli:
    case DlalType::Kind::Imp:
      return pi1_rec(a->left, !positive) && pi1_rec(a->right, positive);
    case DlalType::Kind::Para:
      return pi1_rec(a->body, positive);
    case DlalType::Kind::Forall:
      return positive && pi1_rec(a->body, positive);
  }
  return true;
}

}  // namespace

bool is_pi1(const DlalRef& a) { return pi1_rec(a, true); }

BoundReport complexity_bound(const DlalRef& a, int size) {
  int d = depth(a);
  std::string b = std::to_string(size) + "^(2^" + std::to_string(d) + ")";
  return {d, b, is_pi1(a)};
}

bool dlal_equal(const DlalRef& a, const DlalRef& b) {
  // alpha-equality through erasure-shaped recursion
  if (a->kind != b->kind) return false;
  struct Walk {
    std::vector<std::pair<int, int>> corr;
    bool go(const DlalRef& a, const DlalRef& b) {
      if (a->kind != b->kind) return false;
      switch (a->kind) {
        case DlalType::Kind::Var: {
          for (auto it = corr.rbegin(); it != corr.rend(); ++it) {
            if (it->first == a->id) return it->second == b->id;
            if (it->second == b->id) return false;
          }
          return a->name == b->name;
        }
        case DlalType::Kind::Lolli:
        case DlalType::Kind::Imp:
          return go(a->left, b->left) && go(a->right, b->right);
        case DlalType::Kind::Para:
          return go(a->body, b->body);
        case DlalType::Kind::Forall: {
          corr.emplace_back(a->id, b->id);
          bool r = go(a->body, b->body);
          corr.pop_back();
          return r;
        }
      }
      return false;
    }
  } w;
  return w.go(a, b);
}

bool star_equal(const StarRef& a, const StarRef& b) {
  struct Walk {
    std::vector<std::pair<int, int>> corr;
    bool go(const StarRef& a, const StarRef& b) {
      if (a->kind != b->kind) return false;
      switch (a->kind) {
        case StarType::Kind::Var: {
          for (auto it = corr.rbegin(); it != corr.rend(); ++it) {
            if (it->first == a->id) return it->second == b->id;
            if (it->second == b->id) return false;
          }
          return a->name == b->name;
        }
        case StarType::Kind::Arrow:
          return a->dom.bang == b->dom.bang && go(a->dom.type, b->dom.type) && go(a->cod, b->cod);
        case StarType::Kind::Para:
          return go(a->body, b->body);
        case StarType::Kind::Forall: {
          corr.emplace_back(a->id, b->id);
          bool r = go(a->body, b->body);
          corr.pop_back();
          return r;
        }
      }
      return false;
    }
  } w;
  return w.go(a, b);
}

bool star_d_equal(const StarD& a, const StarD& b) {
  return a.bang == b.bang && star_equal(a.type, b.type);
}

// -------- display --------

namespace {

// precedence: arrows lowest, then $ / !, atoms highest
std::string pd(const DlalRef& a, bool arrow_arg) {
  switch (a->kind) {
    case DlalType::Kind::Var:
      return a->name;
    case DlalType::Kind::Lolli: {
      std::string s = pd(a->left, true) + " -o " + pd(a->right, false);
      return arrow_arg ? "(" + s + ")" : s;
    }
    case DlalType::Kind::Imp: {
      std::string s = pd(a->left, true) + " => " + pd(a->right, false);
      return arrow_arg ? "(" + s + ")" : s;
    }
    case DlalType::Kind::Para: {
      std::string b = pd(a->body, true);
      return "$" + b;
    }
    case DlalType::Kind::Forall: {
      std::string s = "forall " + a->name + ". " + pd(a->body, false);
      return arrow_arg ? "(" + s + ")" : s;
    }
  }
  return "?";
}

std::string ps(const StarRef& a, bool arrow_arg) {
  switch (a->kind) {
    case StarType::Kind::Var:
      return a->name;
    case StarType::Kind::Arrow: {
      std::string d = ps(a->dom.type, true);
      if (a->dom.bang) d = "!" + d;
      std::string s = d + " -o " + ps(a->cod, false);
      return arrow_arg ? "(" + s + ")" : s;
    }
    case StarType::Kind::Para:
      return "$" + ps(a->body, true);
    case StarType::Kind::Forall: {
      std::string s = "forall " + a->name + ". " + ps(a->body, false);
      return arrow_arg ? "(" + s + ")" : s;
    }
  }
  return "?";
}

}  // namespace

std::string print_dlal(const DlalRef& a) { return pd(a, false); }
std::string print_star(const StarRef& a) { return ps(a, false); }

std::string print_star(const StarD& a) {
  std::string s = ps(a.type, true);
  return a.bang ? "!" + s : s;
}

DlalRef nat_dlal_type() {
  auto v = [] { return dvar("a", -1); };
  return dforall("a", -1, dimp(dlolli(v(), v()), dpara(dlolli(v(), v()))));
}

DlalRef word_dlal_type() {
  auto v = [] { return dvar("a", -1); };
  auto aa = [&] { return dlolli(v(), v()); };
  return dforall("a", -1, dimp(aa(), dimp(aa(), dpara(aa()))));
}

}  // namespace dlal
