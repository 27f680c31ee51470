#include "dlal/solver.hpp"

#include "dlal/constraints.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dlal {

// -------- boolean constraints --------

BoolOutcome solve_bool(const ConstraintSet& bools, const std::vector<int>& universe) {
  BoolOutcome out;
  std::map<int, std::pair<int, std::string>> facts;  // id -> (value, origin)
  std::map<int, std::vector<std::pair<int, std::string>>> eq_adj;
  std::map<int, std::vector<std::pair<int, std::string>>> imp_adj;  // b=1 => b'=1
  std::deque<int> queue;

  auto assign = [&](int b, int v, const std::string& why) -> bool {
    auto it = facts.find(b);
    if (it != facts.end()) {
      if (it->second.first != v) {
        out.sat = false;
        out.clash_a = it->second.second;
        out.clash_b = why;
        return false;
      }
      return true;
    }
    facts.emplace(b, std::make_pair(v, why));
    queue.push_back(b);
    return true;
  };

  for (const Constraint& c : bools.items()) {
    switch (c.kind) {
      case Constraint::Kind::BoolEq:
        eq_adj[c.b1].emplace_back(c.b2, c.origin);
        eq_adj[c.b2].emplace_back(c.b1, c.origin);
        break;
      case Constraint::Kind::BoolImp:
        imp_adj[c.b1].emplace_back(c.b2, c.origin);
        break;
      case Constraint::Kind::BoolConst:
        if (!assign(c.b1, c.bval, c.origin)) return out;
        break;
      default:
        throw std::invalid_argument("solve_bool: non-boolean constraint");
    }
  }

  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    int v = facts.at(b).first;
    for (auto& [b2, why] : eq_adj[b])
      if (!assign(b2, v, why)) return out;
    if (v == 1)
      for (auto& [b2, why] : imp_adj[b])
        if (!assign(b2, 1, why)) return out;
  }

  out.sat = true;
  for (int b : universe) {
    auto it = facts.find(b);
    out.values[b] = it == facts.end() ? 0 : it->second.first;
  }
  return out;
}

ConstraintSet apply_bool(const std::map<int, int>& psi, const ConstraintSet& mixed) {
  ConstraintSet out;
  for (const Constraint& c : mixed.items()) {
    int g;
    switch (c.kind) {
      case Constraint::Kind::MixedEq0:
        g = psi.at(c.b1);
        if (g == 1) {
          Constraint r = lin_eq0(c.lhs, c.origin);
          r.family = c.family;
          out.add(r);
        }
        break;
      case Constraint::Kind::MixedGeq1:
        g = psi.at(c.b1);
        if (g == 1) {
          Constraint r = lin_geq1(c.lhs, c.origin);
          r.family = c.family;
          out.add(r);
        }
        break;
      default:
        throw std::invalid_argument("apply_bool: non-mixed constraint");
    }
  }
  return out;
}

// -------- linear system construction --------

LinearSystem build_system(const ConstraintSet& linear, const ParamPool& pool) {
  LinearSystem sys;
  for (int id = 0; id < pool.size(); ++id) {
    ParamKind k = pool.info(id).kind;
    if (k == ParamKind::Exp || k == ParamKind::Door) {
      sys.vars.push_back(id);
      sys.objective = sys.objective.plus(id);
    }
  }
  for (const Constraint& c : linear.items()) {
    switch (c.kind) {
      case Constraint::Kind::LinEq:
        sys.rows.push_back({c.lhs.minus(c.rhs), true, 0, c.origin});
        break;
      case Constraint::Kind::LinGeq0:
        sys.rows.push_back({c.lhs, false, 0, c.origin});
        break;
      case Constraint::Kind::LinEq0:
        sys.rows.push_back({c.lhs, true, 0, c.origin});
        break;
      case Constraint::Kind::LinGeq1:
        sys.rows.push_back({c.lhs, false, 1, c.origin});
        break;
      default:
        throw std::invalid_argument("build_system: non-linear constraint");
    }
  }
  return sys;
}

// -------- exact simplex --------

namespace {

using Row = std::map<int, Rational>;  // column -> coefficient, no zeros

struct PresolveRow {
  Row coeffs;
  bool eq;
  Rational rhs;
  std::string origin;
};

struct Elimination {
  int col;
  Row expr;       // col = const + sum coeffs * other cols
  Rational cnst;
};

void row_normalize(PresolveRow& r) {
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();) {
    if (it->second == 0)
      it = r.coeffs.erase(it);
    else
      ++it;
  }
}

std::string row_key(const PresolveRow& r) {
  // scale-invariant key: divide by the first coefficient's absolute value
  if (r.coeffs.empty()) return r.eq ? "E|" + r.rhs.get_str() : "G|" + r.rhs.get_str();
  Rational lead = r.coeffs.begin()->second;
  Rational scale = abs(lead);
  bool flip = lead < 0 && r.eq;  // only equalities may flip sign
  std::string s = r.eq ? "E" : "G";
  for (auto& [c, v] : r.coeffs) {
    Rational q = v / scale;
    if (flip) q = -q;
    s += "|" + std::to_string(c) + ":" + q.get_str();
  }
  Rational q = r.rhs / scale;
  if (flip) q = -q;
  s += "#" + q.get_str();
  return s;
}

// Dense-tableau two-phase simplex, Bland's rule throughout.
struct Simplex {
  int m = 0, n = 0;  // rows, structural+slack columns
  std::vector<std::vector<Rational>> a;  // m x (n_total + 1), last col = rhs
  std::vector<Rational> cost;            // phase-2 cost per column
  std::vector<int> basis;                // basic column per row
  int n_total = 0;                       // including artificials
  int first_artificial = 0;
  int pivots1 = 0, pivots2 = 0;

  void pivot(int r, int c) {
    Rational p = a[r][c];
    int width = n_total + 1;
    std::vector<Rational>& pr = a[r];
    for (int j = 0; j < width; ++j)
      if (pr[j] != 0) pr[j] /= p;
    pr[c] = 1;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Rational f = a[i][c];
      if (f == 0) continue;
      std::vector<Rational>& ri = a[i];
      for (int j = 0; j < width; ++j)
        if (pr[j] != 0) ri[j] -= f * pr[j];
      ri[c] = 0;
    }
    basis[r] = c;
  }

  // minimizes cst over the current tableau; returns reduced costs
  std::vector<Rational> run(const std::vector<Rational>& cst, int col_limit, int* pivots) {
    // reduced cost vector z_j = c_j - sum_i c_B(i) * a[i][j]
    std::vector<Rational> red(n_total + 1, 0);
    for (int j = 0; j <= n_total; ++j)
      red[j] = j < static_cast<int>(cst.size()) ? cst[j] : Rational(0);
    for (int i = 0; i < m; ++i) {
      Rational cb = basis[i] < static_cast<int>(cst.size()) ? cst[basis[i]] : Rational(0);
      if (cb == 0) continue;
      for (int j = 0; j <= n_total; ++j)
        if (a[i][j] != 0) red[j] -= cb * a[i][j];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j) {
        if (red[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] > 0) {
          Rational ratio = a[i][n_total] / a[i][enter];
          if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) throw std::logic_error("simplex: unbounded objective");
      pivot(leave, enter);
      ++*pivots;
      // incremental update of reduced costs
      Rational f = red[enter];
      if (f != 0) {
        const std::vector<Rational>& pr = a[leave];
        for (int j = 0; j <= n_total; ++j)
          if (pr[j] != 0) red[j] -= f * pr[j];
        red[enter] = 0;
      }
    }
    return red;
  }
};

}  // namespace

LpResult solve_linear_rational(const LinearSystem& sys, const ParamPool& pool) {
  LpResult res;

  // columns: one per exponent parameter, a (plus, minus) pair per door
  std::vector<int> col_param;         // column -> param id
  std::vector<bool> col_negative;     // column represents the negative half
  std::unordered_map<int, int> first_col;  // param -> first column
  for (int v : sys.vars) {
    first_col[v] = static_cast<int>(col_param.size());
    col_param.push_back(v);
    col_negative.push_back(false);
    if (pool.info(v).kind == ParamKind::Door) {
      col_param.push_back(v);
      col_negative.push_back(true);
    }
  }
  int ncols = static_cast<int>(col_param.size());

  std::vector<Rational> obj(ncols, 0);
  for (auto& [p, k] : sys.objective.terms) {
    auto it = first_col.find(p);
    if (it == first_col.end()) continue;
    obj[it->second] += k;
    if (pool.info(p).kind == ParamKind::Door) obj[it->second + 1] += k;
  }

  // presolve rows
  std::vector<PresolveRow> rows;
  rows.reserve(sys.rows.size());
  for (const LinRow& r : sys.rows) {
    PresolveRow pr;
    pr.eq = r.eq;
    pr.rhs = r.rhs;
    pr.origin = r.origin;
    for (auto& [p, k] : r.comb.terms) {
      auto it = first_col.find(p);
      if (it == first_col.end()) throw std::invalid_argument("row references unknown variable");
      pr.coeffs[it->second] += k;
      if (pool.info(p).kind == ParamKind::Door) pr.coeffs[it->second + 1] -= k;
    }
    row_normalize(pr);
    rows.push_back(std::move(pr));
  }

  std::vector<Elimination> elims;
  std::vector<Rational> fixed(ncols, 0);
  std::vector<bool> is_fixed(ncols, false), eliminated(ncols, false);
  Rational obj_const = 0;

  auto substitute_fixed = [&](int col, const Rational& val, std::vector<PresolveRow>& rs) {
    is_fixed[col] = true;
    fixed[col] = val;
    for (PresolveRow& r : rs) {
      auto it = r.coeffs.find(col);
      if (it == r.coeffs.end()) continue;
      r.rhs -= it->second * val;
      r.coeffs.erase(it);
    }
    obj_const += obj[col] * val;
    obj[col] = 0;
  };

  auto infeasible = [&](const PresolveRow& r) {
    res.feasible = false;
    res.infeasible_origins.push_back(r.origin);
    return res;
  };

  // elimination of a column via an equality row
  auto eliminate = [&](PresolveRow row, int col, std::vector<PresolveRow>& rs) {
    Rational a = row.coeffs.at(col);
    row.coeffs.erase(col);
    // col = (rhs - rest) / a
    Elimination e;
    e.col = col;
    e.cnst = row.rhs / a;
    for (auto& [c, v] : row.coeffs) e.expr[c] = -v / a;
    elims.push_back(e);
    eliminated[col] = true;
    for (PresolveRow& r : rs) {
      auto it = r.coeffs.find(col);
      if (it == r.coeffs.end()) continue;
      Rational f = it->second;
      r.coeffs.erase(it);
      r.rhs -= f * e.cnst;
      for (auto& [c, v] : e.expr) r.coeffs[c] += f * v;
      row_normalize(r);
    }
    // objective substitution
    Rational fo = obj[col];
    if (fo != 0) {
      obj_const += fo * e.cnst;
      for (auto& [c, v] : e.expr) obj[c] += fo * v;
      obj[col] = 0;
    }
    // domain of the eliminated variable: (rhs - rest)/a >= 0
    PresolveRow dom;
    dom.eq = false;
    dom.rhs = -e.cnst;
    for (auto& [c, v] : e.expr) dom.coeffs[c] = v;
    // dom encodes  sum expr * x >= -cnst  i.e.  cnst + expr*x >= 0
    dom.origin = row.origin;
    row_normalize(dom);
    rs.push_back(std::move(dom));
  };

  // presolve: in-place simplification passes interleaved with equality
  // elimination, until a fixpoint
  std::vector<bool> drop;
  for (;;) {
    bool any = true;
    while (any) {
      any = false;
      drop.assign(rows.size(), false);
      for (size_t idx = 0; idx < rows.size(); ++idx) {
        if (drop[idx]) continue;
        PresolveRow& r = rows[idx];
        row_normalize(r);
        if (r.coeffs.empty()) {
          if (r.eq ? r.rhs != 0 : r.rhs > 0) {
            infeasible(r);
            return res;
          }
          drop[idx] = true;
          any = true;
          continue;
        }
        if (!r.eq && r.rhs <= 0) {
          // nonneg coefficients over nonneg variables: always true
          bool allpos = true;
          for (auto& [c, v] : r.coeffs)
            if (v < 0) {
              allpos = false;
              break;
            }
          if (allpos) {
            drop[idx] = true;
            any = true;
            continue;
          }
        }
        if (r.coeffs.size() == 1) {
          int col = r.coeffs.begin()->first;
          Rational a = r.coeffs.begin()->second;
          Rational v = r.rhs / a;
          if (r.eq) {
            if (v < 0) {
              infeasible(r);
              return res;
            }
            drop[idx] = true;
            substitute_fixed(col, v, rows);
            any = true;
            continue;
          }
          if (a > 0 && v <= 0) {  // x >= nonpositive: implied by the domain
            drop[idx] = true;
            any = true;
            continue;
          }
          if (a < 0 && v < 0) {  // x <= negative: impossible
            infeasible(r);
            return res;
          }
        }
        if (r.eq && r.rhs == 0) {
          // same-signed zero sum pins every participant to zero
          bool allpos = true, allneg = true;
          for (auto& [c, v] : r.coeffs) {
            allpos = allpos && v > 0;
            allneg = allneg && v < 0;
          }
          if (allpos || allneg) {
            std::vector<int> cols;
            cols.reserve(r.coeffs.size());
            for (auto& [c, v] : r.coeffs) cols.push_back(c);
            drop[idx] = true;
            for (int c : cols) substitute_fixed(c, 0, rows);
            any = true;
            continue;
          }
        }
      }
      std::vector<PresolveRow> keep;
      keep.reserve(rows.size());
      std::unordered_map<std::string, bool> seen;
      for (size_t idx = 0; idx < rows.size(); ++idx) {
        if (drop[idx]) continue;
        std::string k = row_key(rows[idx]);
        if (seen.emplace(k, true).second)
          keep.push_back(std::move(rows[idx]));
        else
          any = true;
      }
      rows = std::move(keep);
    }
    // one equality elimination, preferring unit coefficients; repeat the
    // simplification passes afterwards
    int pick = -1, pick_col = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].eq) continue;
      int unit_col = -1, any_col = -1;
      for (auto& [c, v] : rows[i].coeffs) {
        if (any_col < 0) any_col = c;
        if (unit_col < 0 && (v == 1 || v == -1)) unit_col = c;
      }
      if (any_col < 0) continue;
      pick = static_cast<int>(i);
      pick_col = unit_col >= 0 ? unit_col : any_col;
      break;
    }
    if (pick < 0) break;
    PresolveRow row = std::move(rows[pick]);
    rows.erase(rows.begin() + pick);
    eliminate(std::move(row), pick_col, rows);
  }

  res.stats.presolve_eliminated = static_cast<int>(elims.size());

  // live columns
  std::vector<int> live;
  std::unordered_map<int, int> live_index;
  for (int c = 0; c < ncols; ++c)
    if (!is_fixed[c] && !eliminated[c]) {
      live_index[c] = static_cast<int>(live.size());
      live.push_back(c);
    }
  int nlive = static_cast<int>(live.size());
  int m = static_cast<int>(rows.size());
  res.stats.cols = nlive;
  res.stats.rows = m;

  // build tableau: structural + one slack per inequality + artificials
  int nslack = 0;
  for (auto& r : rows)
    if (!r.eq) ++nslack;

  Simplex sx;
  sx.m = m;
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int total = nlive + nslack;  // artificials appended after

  // count artificials: inequalities with rhs < 0 flip and take their slack as
  // the initial basic variable, everything else needs an artificial
  int nart = 0;
  {
    int si = 0;
    for (int i = 0; i < m; ++i) {
      if (!rows[i].eq) {
        slack_col[i] = nlive + si;
        ++si;
        if (!(rows[i].rhs < 0)) ++nart;
      } else {
        ++nart;
      }
    }
  }
  sx.n_total = total + nart;
  sx.first_artificial = total;
  sx.a.assign(m, std::vector<Rational>(sx.n_total + 1, 0));
  sx.basis.assign(m, -1);

  {
    int ai = total;
    for (int i = 0; i < m; ++i) {
      PresolveRow& r = rows[i];
      bool neg = r.rhs < 0;
      Rational sgn = neg ? -1 : 1;
      for (auto& [c, v] : r.coeffs) sx.a[i][live_index.at(c)] = sgn * v;
      sx.a[i][sx.n_total] = sgn * r.rhs;
      if (!r.eq) {
        // sgn*(a*x) - sgn*s = sgn*b with slack s >= 0
        sx.a[i][slack_col[i]] = -sgn;
        if (neg) {
          sx.basis[i] = slack_col[i];
        } else {
          sx.a[i][ai] = 1;
          sx.basis[i] = ai;
          art_col[i] = ai;
          ++ai;
        }
      } else {
        sx.a[i][ai] = 1;
        sx.basis[i] = ai;
        art_col[i] = ai;
        ++ai;
      }
    }
  }

  // phase 1
  std::vector<Rational> phase1(sx.n_total, 0);
  for (int j = sx.first_artificial; j < sx.n_total; ++j) phase1[j] = 1;
  std::vector<Rational> red = sx.run(phase1, sx.n_total, &sx.pivots1);
  Rational p1 = 0;
  for (int i = 0; i < m; ++i)
    if (sx.basis[i] >= sx.first_artificial) p1 += sx.a[i][sx.n_total];
  res.stats.pivots_phase1 = sx.pivots1;
  if (p1 != 0) {
    res.feasible = false;
    // phase-1 duals: rows with nonzero multiplier form the infeasibility hint
    for (int i = 0; i < m; ++i) {
      Rational yi;
      if (art_col[i] >= 0) {
        yi = 1 - red[art_col[i]];
      } else {
        // y_i from the slack or artificial column of row i
        int col = slack_col[i] >= 0 ? slack_col[i] : -1;
        if (col >= 0)
          yi = -red[col];
        else
          yi = 1;
      }
      if (yi != 0) res.infeasible_origins.push_back(rows[i].origin);
    }
    if (res.infeasible_origins.empty())
      for (int i = 0; i < m; ++i)
        if (sx.basis[i] >= sx.first_artificial && sx.a[i][sx.n_total] != 0)
          res.infeasible_origins.push_back(rows[i].origin);
    return res;
  }

  // drive remaining artificials out of the basis
  for (int i = 0; i < m; ++i) {
    if (sx.basis[i] < sx.first_artificial) continue;
    int enter = -1;
    for (int j = 0; j < sx.first_artificial; ++j)
      if (sx.a[i][j] != 0) {
        enter = j;
        break;
      }
    if (enter >= 0) sx.pivot(i, enter);
    // otherwise the row is redundant; the artificial stays basic at zero and
    // phase 2 cannot move it since artificial columns are excluded there
  }

  // phase 2
  std::vector<Rational> phase2(sx.n_total, 0);
  for (int j = 0; j < nlive; ++j) phase2[j] = obj[live[j]];
  sx.run(phase2, sx.first_artificial, &sx.pivots2);
  res.stats.pivots_phase2 = sx.pivots2;

  // read off values
  std::vector<Rational> colval(ncols, 0);
  for (int i = 0; i < m; ++i)
    if (sx.basis[i] < nlive) colval[live[sx.basis[i]]] = sx.a[i][sx.n_total];
  for (int c = 0; c < ncols; ++c)
    if (is_fixed[c]) colval[c] = fixed[c];
  // eliminated columns, most recent first
  for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
    Rational v = it->cnst;
    for (auto& [c, k] : it->expr) v += k * colval[c];
    colval[it->col] = v;
  }

  res.feasible = true;
  for (size_t i = 0; i < col_param.size(); ++i) {
    if (col_negative[i]) continue;
    int p = col_param[i];
    Rational v = colval[i];
    if (pool.info(p).kind == ParamKind::Door) v -= colval[i + 1];
    res.values[p] = v;
  }
  // objective: exponents plus absolute door contributions
  res.objective = 0;
  for (auto& [p, k] : sys.objective.terms) {
    Rational v = res.values.at(p);
    if (pool.info(p).kind == ParamKind::Door) v = abs(v);
    res.objective += k * v;
  }
  return res;
}

std::map<int, long long> scale_to_integers(const std::map<int, Rational>& sol,
                                           const LinearSystem& sys, long long* factor) {
  mpz_class l = 1;
  for (auto& [p, v] : sol) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::map<int, long long> out;
  for (auto& [p, v] : sol) {
    mpq_class scaled = v * Rational(l);
    if (scaled.get_den() != 1) throw std::logic_error("scale_to_integers: lcm failed");
    if (!scaled.get_num().fits_slong_p())
      throw std::runtime_error("scale_to_integers: value out of range");
    out[p] = scaled.get_num().get_si();
  }
  // verify each row exactly against the original right-hand sides
  for (const LinRow& r : sys.rows) {
    Rational s = 0;
    for (auto& [p, k] : r.comb.terms) s += Rational(k) * Rational(static_cast<long>(out.at(p)));
    if (r.eq ? s != r.rhs : s < r.rhs) {
      if (r.rhs != 0 && r.rhs != 1)
        throw std::runtime_error("scale_to_integers: non-homogeneous pinned row broken by scaling");
      throw std::logic_error("scale_to_integers: scaled solution violates a row");
    }
  }
  if (factor) {
    if (!l.fits_slong_p()) throw std::runtime_error("scale factor out of range");
    *factor = l.get_si();
  }
  return out;
}

// -------- end-to-end --------

bool constraint_holds(const Constraint& c, const Instantiation& phi) {
  using K = Constraint::Kind;
  switch (c.kind) {
    case K::BoolEq:
      return phi.boolv(c.b1) == phi.boolv(c.b2);
    case K::BoolConst:
      return phi.boolv(c.b1) == c.bval;
    case K::BoolImp:
      return phi.boolv(c.b1) != 1 || phi.boolv(c.b2) == 1;
    case K::LinEq:
      return phi.eval(c.lhs) == phi.eval(c.rhs);
    case K::LinGeq0:
      return phi.eval(c.lhs) >= 0;
    case K::LinEq0:
      return phi.eval(c.lhs) == 0;
    case K::MixedEq0:
      return phi.boolv(c.b1) != 1 || phi.eval(c.lhs) == 0;
    case K::MixedGeq1:
      return phi.boolv(c.b1) != 1 || phi.eval(c.lhs) >= 1;
    case K::LinGeq1:
      return phi.eval(c.lhs) >= 1;
  }
  return false;
}

bool check_solution(const ConstraintSet& s, const Instantiation& phi) {
  for (const Constraint& c : s.items())
    if (!constraint_holds(c, phi)) return false;
  return true;
}

SolveOutcome solve(const ConstraintSet& s, const ParamPool& pool,
                   const std::vector<LinRow>& extra_rows,
                   const std::map<int, Rational>* external_solution) {
  SolveOutcome out;
  SplitSets parts = split(s);

  BoolOutcome bo = solve_bool(parts.bools, pool.ids_of(ParamKind::Bool));
  if (!bo.sat) {
    out.sat = false;
    out.unsat_hint = {bo.clash_a, bo.clash_b};
    return out;
  }
  out.bool_solution = bo.values;

  ConstraintSet lin = parts.linear;
  lin.merge(apply_bool(bo.values, parts.mixed));

  LinearSystem sys = build_system(lin, pool);
  for (const LinRow& r : extra_rows) sys.rows.push_back(r);

  std::map<int, Rational> values;
  if (external_solution) {
    values = *external_solution;
    for (int v : sys.vars)
      if (!values.count(v)) values[v] = 0;
    for (const LinRow& r : sys.rows) {
      Rational acc = 0;
      for (auto& [p, k] : r.comb.terms) acc += Rational(k) * values.at(p);
      if (r.eq ? acc != r.rhs : acc < r.rhs) {
        out.sat = false;
        out.unsat_hint = {"external solution violates: " + r.origin};
        return out;
      }
    }
  } else {
    LpResult lp = solve_linear_rational(sys, pool);
    out.stats = lp.stats;
    if (!lp.feasible) {
      out.sat = false;
      out.unsat_hint = lp.infeasible_origins;
      return out;
    }
    values = lp.values;
    out.lp_objective = lp.objective;
  }

  std::map<int, long long> ints = scale_to_integers(values, sys, &out.scale);

  out.sat = true;
  out.inst.bools = bo.values;
  out.inst.ints = std::move(ints);
  if (!check_solution(s, out.inst))
    throw std::logic_error("solve: returned instantiation fails recheck (internal bug)");
  return out;
}

// -------- LP text format --------

namespace {

std::string rat_str(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

}  // namespace

std::string write_lp(const LinearSystem& sys, const ParamPool& pool) {
  std::string out = "min " + print_comb(sys.objective, pool) + "\n";
  for (const LinRow& r : sys.rows) {
    out += "L " + print_comb(r.comb, pool) + (r.eq ? " = " : " >= ") + rat_str(r.rhs) + "\n";
  }
  return out;
}

std::string write_lp_solution(const std::map<int, Rational>& sol, const ParamPool& pool) {
  std::string out;
  for (auto& [p, v] : sol) out += pool.name(p) + " = " + rat_str(v) + "\n";
  return out;
}

std::map<int, Rational> parse_lp_solution(const std::string& text, const ParamPool& pool) {
  std::map<int, Rational> out;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string name, eq, val;
    if (!(ls >> name)) continue;
    if (!(ls >> eq >> val) || eq != "=")
      throw std::runtime_error("lp solution line " + std::to_string(lineno) +
                               ": expected 'var = value'");
    auto id = pool.find(name);
    if (!id)
      throw std::runtime_error("lp solution line " + std::to_string(lineno) +
                               ": unknown variable '" + name + "'");
    Rational r;
    if (r.set_str(val, 10) != 0)
      throw std::runtime_error("lp solution line " + std::to_string(lineno) + ": bad rational '" +
                               val + "'");
    r.canonicalize();
    out[*id] = r;
  }
  return out;
}

}  // namespace dlal
