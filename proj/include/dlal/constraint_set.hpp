#pragma once

// Constraint shapes over boolean and integer parameters, with origin tags.

#include <string>
#include <unordered_set>
#include <vector>

#include "dlal/param_base.hpp"

namespace dlal {

enum class Family { Ltype, Bracket, Bang, Scope, Data, Other };

const char* family_name(Family f);

struct Constraint {
  // The eight shapes of generated constraint sets, plus LinGeq1 which only
  // appears after boolean application / in instantiated data-type rows.
  enum class Kind {
    BoolEq,     // b1 = b2
    BoolConst,  // b1 = bval
    BoolImp,    // b1 = 1  =>  b2 = 1
    LinEq,      // lhs = rhs
    LinGeq0,    // lhs >= 0
    LinEq0,     // lhs = 0
    MixedEq0,   // b1 = 1  =>  lhs = 0
    MixedGeq1,  // b1 = 1  =>  lhs >= 1
    LinGeq1,    // lhs >= 1
  };
  Kind kind;
  int b1 = -1, b2 = -1;
  int bval = 0;
  LinComb lhs, rhs;
  std::string origin;
  Family family = Family::Other;

  bool trivially_true() const;
  std::string key() const;  // structural identity, origin excluded
};

Constraint bool_eq(int b1, int b2, std::string origin);
Constraint bool_const(int b, int v, std::string origin);
Constraint bool_imp(int b1, int b2, std::string origin);
Constraint lin_eq(LinComb l, LinComb r, std::string origin);
Constraint lin_geq0(LinComb l, std::string origin);
Constraint lin_eq0(LinComb l, std::string origin);
Constraint mixed_eq0(int b, LinComb l, std::string origin);
Constraint mixed_geq1(int b, LinComb l, std::string origin);
Constraint lin_geq1(LinComb l, std::string origin);

/// Deduplicated, insertion-ordered collection. Trivially-true constraints are
/// dropped at insertion; duplicates keep the first origin seen.
class ConstraintSet {
 public:
  bool add(Constraint c);
  void merge(const ConstraintSet& other);
  const std::vector<Constraint>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<Constraint> items_;
  std::unordered_set<std::string> seen_;
};

class ParamPool;
std::string print_constraint(const Constraint& c, const ParamPool& pool);
std::string dump_constraints(const ConstraintSet& s, const ParamPool& pool, bool origins = true);

}  // namespace dlal
