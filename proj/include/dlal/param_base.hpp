#pragma once

// Parameter pool and linear combinations of integer parameters.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlal {

enum class ParamKind { Bool, Exp, Door };

struct ParamInfo {
  ParamKind kind;
  int index;           // per-kind display index: b3 / n5 / m7
  std::string origin;  // which site introduced it
  std::string explicit_name;  // set when registered from a dump
};

/// Parameters of one inference job. Ids are dense and job-local.
class ParamPool {
 public:
  int fresh_bool(std::string origin);
  int fresh_exp(std::string origin);
  int fresh_door(std::string origin);

  /// Registers a parameter under a dumped name like "m3" / "n12" / "b4".
  int register_named(const std::string& name, std::string origin);

  const ParamInfo& info(int id) const { return params_.at(id); }
  int size() const { return static_cast<int>(params_.size()); }
  std::string name(int id) const;
  std::optional<int> find(const std::string& name) const;

  int bool_count() const { return nb_; }
  int exp_count() const { return nn_; }
  int door_count() const { return nm_; }

  std::vector<int> ids_of(ParamKind k) const;

 private:
  std::vector<ParamInfo> params_;
  int nb_ = 0, nn_ = 0, nm_ = 0;
  std::map<std::string, int> by_name_;
};

/// Sum of integer parameters with small signed coefficients. Generated
/// constraints only ever use unit coefficients; the data-type listings add
/// differences, hence signed.
struct LinComb {
  std::vector<std::pair<int, int>> terms;  // (param id, coeff), sorted, coeff != 0

  static LinComb zero() { return {}; }
  static LinComb of(int param, int coeff = 1);
  bool is_zero() const { return terms.empty(); }
  LinComb plus(const LinComb& o) const;
  LinComb plus(int param, int coeff = 1) const;
  LinComb minus(const LinComb& o) const;
  bool operator==(const LinComb& o) const { return terms == o.terms; }
  std::string key() const;
  long long eval(const std::map<int, long long>& vals) const;
};

struct Instantiation {
  std::map<int, int> bools;        // param id -> 0/1
  std::map<int, long long> ints;   // param id -> value

  int boolv(int id) const;
  long long intv(int id) const;
  long long eval(const LinComb& c) const;
};

std::string print_comb(const LinComb& c, const ParamPool& pool);

}  // namespace dlal
