#pragma once

// Constraint solving: minimal boolean solutions, mixed-constraint
// instantiation, exact-rational two-phase simplex, and integer scaling.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlal/constraint_set.hpp"
#include "dlal/param_base.hpp"

namespace dlal {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator), which is what the integer-scaling step relies on.
using Rational = mpq_class;

struct BoolOutcome {
  bool sat = false;
  std::map<int, int> values;  // total over the given universe; minimal when sat
  std::string clash_a, clash_b;  // origins of the clashing pair when unsat
};

/// Saturation-based resolution. Returns the pointwise-minimal solution:
/// a parameter is 1 exactly when some chain of constraints forces it.
BoolOutcome solve_bool(const ConstraintSet& bools, const std::vector<int>& universe);

/// Keeps the linear body of each mixed constraint whose guard is 1.
ConstraintSet apply_bool(const std::map<int, int>& psi, const ConstraintSet& mixed);

struct LinRow {
  LinComb comb;
  bool eq = false;  // otherwise >=
  Rational rhs = 0;
  std::string origin;
};

struct LinearSystem {
  std::vector<int> vars;  // integer parameter ids, ascending
  std::vector<LinRow> rows;
  LinComb objective;  // door parameters enter via |m| (split inside the LP)
};

/// Rows from a purely linear constraint set; objective = sum of all door and
/// exponent parameters of the pool.
LinearSystem build_system(const ConstraintSet& linear, const ParamPool& pool);

struct LpStats {
  int cols = 0, rows = 0;            // after presolve, before slacks
  int presolve_eliminated = 0;
  int pivots_phase1 = 0, pivots_phase2 = 0;
};

struct LpResult {
  bool feasible = false;
  std::map<int, Rational> values;
  Rational objective = 0;  // exponents plus |door| contributions
  std::vector<std::string> infeasible_origins;
  LpStats stats;
};

/// Exact two-phase simplex with Bland's rule. Exponent parameters are
/// nonnegative variables; door parameters range over all of Z and are split
/// as m+ - m- with both halves in the objective.
LpResult solve_linear_rational(const LinearSystem& sys, const ParamPool& pool);

/// Multiplies by the least common multiple of denominators; throws if that
/// breaks a row (only possible for rows with a right-hand side not in {0,1},
/// which generated systems never contain).
std::map<int, long long> scale_to_integers(const std::map<int, Rational>& sol,
                                           const LinearSystem& sys, long long* factor = nullptr);

struct SolveOutcome {
  bool sat = false;
  Instantiation inst;
  std::map<int, int> bool_solution;
  Rational lp_objective = 0;
  long long scale = 1;
  std::vector<std::string> unsat_hint;
  LpStats stats;
};

/// split -> solve_bool -> apply_bool -> simplex -> scale, with a full recheck
/// of the returned instantiation against S.
SolveOutcome solve(const ConstraintSet& s, const ParamPool& pool,
                   const std::vector<LinRow>& extra_rows = {},
                   const std::map<int, Rational>* external_solution = nullptr);

bool constraint_holds(const Constraint& c, const Instantiation& phi);
bool check_solution(const ConstraintSet& s, const Instantiation& phi);

// LP exchange format: `min <comb>` header, `L <comb> (=|>=) <k>` rows,
// solutions as `var = p/q` lines.
std::string write_lp(const LinearSystem& sys, const ParamPool& pool);
std::string write_lp_solution(const std::map<int, Rational>& sol, const ParamPool& pool);
std::map<int, Rational> parse_lp_solution(const std::string& text, const ParamPool& pool);

}  // namespace dlal
