#pragma once

// Church-style System F: types, terms, concrete syntax, type checking.

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlal {

// -------- types --------

struct FType;
using FTypeRef = std::shared_ptr<const FType>;

struct FType {
  enum class Kind { Var, Arrow, Forall };
  Kind kind;
  std::string name;   // Var display name, Forall binder name
  int id = 0;         // Var: id of its binder (or of the free name); Forall: binder id
  FTypeRef dom, cod;  // Arrow
  FTypeRef body;      // Forall
};

FTypeRef tvar(std::string name, int id);
FTypeRef tarrow(FTypeRef dom, FTypeRef cod);
FTypeRef tforall(std::string name, int id, FTypeRef body);

/// Alpha-equality. Bound variables are matched positionally, free ones by name,
/// so types from independent parses compare as expected.
bool type_equal(const FTypeRef& a, const FTypeRef& b);

void free_type_var_ids(const FTypeRef& t, std::set<int>& out);
bool type_has_free_name(const FTypeRef& t, const std::string& name);

/// Capture-avoiding substitution of `u` for the free variable `var_id` in `t`.
FTypeRef subst_type(const FTypeRef& t, int var_id, const FTypeRef& u);

std::string print_type(const FTypeRef& t);

// -------- terms --------

struct FTerm;
using FTermRef = std::shared_ptr<const FTerm>;

struct FTerm {
  enum class Kind { Var, Lam, App, TLam, TApp };
  Kind kind;
  std::string name;   // Var occurrence / Lam binder / TLam binder
  int id = 0;         // binder id (occurrences share their binder's id)
  FTypeRef annot;     // Var: the binder's type; Lam: binder annotation
  FTermRef fun, arg;  // App; TApp uses fun
  FTermRef body;      // Lam, TLam
  FTypeRef targ;      // TApp
};

FTermRef mkvar(std::string name, int id, FTypeRef annot);
FTermRef mklam(std::string name, int id, FTypeRef annot, FTermRef body);
FTermRef mkapp(FTermRef fun, FTermRef arg);
FTermRef mktlam(std::string name, int id, FTermRef body);
FTermRef mktapp(FTermRef fun, FTypeRef targ);

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line), col(col) {}
};

/// Parses a closed-by-binders term; every binder receives a fresh id and every
/// occurrence carries its binder's annotation. Unbound term variables are errors.
FTermRef parse_term(std::string_view text);
FTypeRef parse_type(std::string_view text);

std::string print_term(const FTermRef& t);

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Church-style type checking: recomputes the unique type, checks applications,
/// type applications and the eigenvariable condition at each type abstraction.
FTypeRef typecheck(const FTermRef& t);

int term_size(const FTermRef& t);

/// Occurrences of term variables free in t (binder not inside t).
std::vector<const FTerm*> free_term_vars(const FTermRef& t);

bool term_equal(const FTermRef& a, const FTermRef& b);

FTypeRef nat_f_type();   // forall a. (a->a) -> (a->a)
FTypeRef word_f_type();  // forall a. (a->a) -> (a->a) -> (a->a)

}  // namespace dlal
