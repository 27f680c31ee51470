#pragma once

// Generation of the Ltype / Bracket / Bang / Scope constraint families from a
// free decoration, and the boolean/linear/mixed split.

#include <unordered_map>
#include <vector>

#include "dlal/constraint_set.hpp"
#include "dlal/param.hpp"

namespace dlal {

/// Unif(E1, E2): parameter equations making two decorations of the same
/// F type instantiate identically. Precondition: equal erasures.
ConstraintSet unif(const LinearPType& e1, const LinearPType& e2, const std::string& origin);
ConstraintSet unif(const BangPType& e1, const BangPType& e2, const std::string& origin);

/// Types assigned by the local typing rules, per node and per layer:
/// node_type is the type of $^m u (doors included), inner_type of u itself.
struct LocalTyping {
  LinearPType root_type;
  ConstraintSet mc;
  std::unordered_map<const PTermNode*, LinearPType> node_type;
  std::unordered_map<const PTermNode*, LinearPType> inner_type;
};

LocalTyping local_typing(const PTermRef& t);

/// Ltype = Mc plus b = 1 for every variable occurring more than once.
ConstraintSet ltype(const PTermRef& t, const LocalTyping& lt);

// A position inside a p-term: a node, at the outer layer ($^m u, doors
// included on the path) or the inner layer (u, the node's own door crossed).
struct Position {
  const PTermNode* node;
  bool inner;
};

using DoorsWord = std::vector<int>;  // door parameter ids along a path

/// <t>_u for a position below t; throws if the node is not in t.
DoorsWord doors(const PTermRef& t, const Position& u);

LinComb word_sum(const DoorsWord& w, size_t prefix = SIZE_MAX);

ConstraintSet wbracket(const DoorsWord& w, const std::string& origin, Family fam = Family::Bracket);
ConstraintSet bracket(const DoorsWord& w, const std::string& origin, Family fam = Family::Bracket);

ConstraintSet bracket_constraints(const PTermRef& t);
ConstraintSet bang_constraints(const PTermRef& t, const LocalTyping& lt);
ConstraintSet scope_constraints(const PTermRef& t, const LocalTyping& lt);

struct GenResult {
  LocalTyping typing;
  ConstraintSet all;
  size_t n_ltype = 0, n_bracket = 0, n_bang = 0, n_scope = 0;
};

/// Const(<M>) = Ltype ∪ Bracket ∪ Bang ∪ Scope, deduplicated.
GenResult const_all(const PTermRef& t);

struct SplitSets {
  ConstraintSet bools, linear, mixed;
};

/// Partition by shape into boolean, linear and mixed constraints.
SplitSets split(const ConstraintSet& s);

}  // namespace dlal
