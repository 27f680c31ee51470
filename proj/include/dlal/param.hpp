#pragma once

// Parameterized types and pseudo-terms, free decorations, instantiation,
// admissibility, and the debug dump formats.

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "dlal/constraint_set.hpp"
#include "dlal/dlal_types.hpp"
#include "dlal/fsyntax.hpp"
#include "dlal/param_base.hpp"

namespace dlal {

// -------- parameterized types --------
//
//   F ::= a | D -o A | forall a. A        A ::= $^c F        D ::= $^{b,c} F

struct PTypeNode;
using PTypeFRef = std::shared_ptr<const PTypeNode>;

struct LinearPType {
  LinComb exps;
  PTypeFRef body;
};

struct BangPType {
  int bang = -1;  // boolean parameter id
  LinComb exps;
  PTypeFRef body;
};

struct PTypeNode {
  enum class Kind { Var, Arrow, Forall };
  Kind kind;
  std::string name;
  int id = 0;        // Var / Forall binder
  BangPType dom;     // Arrow
  LinearPType cod;   // Arrow
  LinearPType body;  // Forall
};

PTypeFRef pvar(std::string name, int id);
PTypeFRef parrow(BangPType dom, LinearPType cod);
PTypeFRef pforall(std::string name, int id, LinearPType body);

FTypeRef erase(const LinearPType& a);
FTypeRef erase(const BangPType& a);

/// D° — forgets the bang flag.
LinearPType degree(const BangPType& d);

LinearPType free_linear_decoration(const FTypeRef& t, ParamPool& pool, const std::string& origin);
BangPType free_bang_decoration(const FTypeRef& t, ParamPool& pool, const std::string& origin);

/// B[A/a]: every $^{c'}a becomes $^{c'+c}F where A = $^{c}F, likewise under bangs.
LinearPType ptype_subst(const LinearPType& b, int var_id, const LinearPType& a);

/// Adm(E): every combination is >= 0 and bang flags force >= 1.
void adm_constraints(const LinearPType& e, ConstraintSet& out, const std::string& origin);
void adm_constraints(const BangPType& e, ConstraintSet& out, const std::string& origin);

std::string print_ptype(const LinearPType& a, const ParamPool& pool);
std::string print_ptype(const BangPType& a, const ParamPool& pool);

// -------- parameterized pseudo-terms --------
//
//   u ::= x^D | \x^D. t | (t)t | /\a. t | (t)A        t ::= $^m u

struct PTermNode;
using PTermRef = std::shared_ptr<const PTermNode>;

struct PTermNode {
  int door = -1;  // door parameter id (one per node)
  enum class Kind { Var, Lam, App, TLam, TApp };
  Kind kind;
  std::string name;  // Var occurrence / Lam binder / TLam binder
  int var_id = 0;
  BangPType vtype;        // Var occurrence type == its binder's decoration; Lam binder type
  PTermRef fun, arg;      // App; TApp uses fun
  PTermRef body;          // Lam, TLam
  LinearPType targ;       // TApp
  std::string path;       // node position, for origins and diagnostics
};

/// The free decoration <M>: one fresh door parameter per node, one shared free
/// bang decoration per variable, fresh disjoint linear decorations at type
/// applications.
PTermRef free_decorate(const FTermRef& m, ParamPool& pool);

FTermRef erase(const PTermRef& t);

int pterm_node_count(const PTermRef& t);

// -------- instantiation --------

struct AdmissibilityError : std::runtime_error {
  int param;
  AdmissibilityError(const std::string& msg, int param)
      : std::runtime_error(msg), param(param) {}
};

bool admissible(const Instantiation& phi, const LinearPType& e, int* offending = nullptr);
bool admissible(const Instantiation& phi, const BangPType& e, int* offending = nullptr);

StarRef instantiate_type(const Instantiation& phi, const LinearPType& e);
StarD instantiate_type(const Instantiation& phi, const BangPType& e);

// -------- regular pseudo-terms (instantiated) --------

struct PseudoNode;
using PseudoRef = std::shared_ptr<const PseudoNode>;

struct PseudoNode {
  int door = 0;  // signed: opening doors when positive, closing when negative
  enum class Kind { Var, Lam, App, TLam, TApp };
  Kind kind;
  std::string name;
  int var_id = 0;
  StarD vtype;        // Var occurrence / Lam binder
  PseudoRef fun, arg;
  PseudoRef body;
  StarRef targ;
  std::string path;
};

PseudoRef instantiate_term(const Instantiation& phi, const PTermRef& t);

FTermRef erase(const PseudoRef& t);

std::string print_pseudo(const PseudoRef& t);

// -------- debug dump --------

std::string dump_pterm(const PTermRef& t, const ParamPool& pool);

struct PTermDump {
  PTermRef term;
  ParamPool pool;
};

/// Parses the dump format back; parameters are re-registered under their
/// dumped names.
PTermDump parse_pterm_dump(const std::string& text);

/// `param = value` lines against an existing pool.
Instantiation parse_instantiation(const std::string& text, const ParamPool& pool);

}  // namespace dlal
