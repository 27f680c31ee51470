#pragma once

// DLAL and DLAL* type languages: erasure, the star translation, depth,
// the complexity-bound report and ASCII display.

#include <memory>
#include <string>

#include "dlal/fsyntax.hpp"

namespace dlal {

struct DlalType;
using DlalRef = std::shared_ptr<const DlalType>;

// A ::= a | A -o B | A => B | $A | forall a. A
struct DlalType {
  enum class Kind { Var, Lolli, Imp, Para, Forall };
  Kind kind;
  std::string name;
  int id = 0;
  DlalRef left, right;  // Lolli/Imp
  DlalRef body;         // Para, Forall
};

DlalRef dvar(std::string name, int id);
DlalRef dlolli(DlalRef a, DlalRef b);
DlalRef dimp(DlalRef a, DlalRef b);
DlalRef dpara(DlalRef a);
DlalRef dforall(std::string name, int id, DlalRef body);

struct StarType;
using StarRef = std::shared_ptr<const StarType>;

/// Arrow domains may carry a bang; bang appears nowhere else.
struct StarD {
  StarRef type;
  bool bang = false;
};

// A ::= a | D -o A | forall a. A | $A,   D ::= A | !A
struct StarType {
  enum class Kind { Var, Arrow, Forall, Para };
  Kind kind;
  std::string name;
  int id = 0;
  StarD dom;
  StarRef cod;   // Arrow
  StarRef body;  // Forall, Para
};

StarRef svar(std::string name, int id);
StarRef sarrow(StarD dom, StarRef cod);
StarRef sforall(std::string name, int id, StarRef body);
StarRef spara(StarRef body);
StarRef sparas(StarRef body, int n);  // $^n body

FTypeRef erase(const DlalRef& a);
FTypeRef erase(const StarRef& a);

/// (A => B)* = !A* -o B*; commutes with everything else.
StarRef star(const DlalRef& a);

/// Display inverse of star: every !A -o B becomes A => B.
DlalRef unstar(const StarRef& a);

int depth(const DlalRef& a);

/// True when the type has no negative forall occurrence.
bool is_pi1(const DlalRef& a);

struct BoundReport {
  int depth;
  std::string bound;  // "<size>^(2^<depth>)"
  bool pi1;
};
BoundReport complexity_bound(const DlalRef& a, int size);

bool dlal_equal(const DlalRef& a, const DlalRef& b);
bool star_equal(const StarRef& a, const StarRef& b);
bool star_d_equal(const StarD& a, const StarD& b);

std::string print_dlal(const DlalRef& a);
std::string print_star(const StarRef& a);
std::string print_star(const StarD& a);

DlalRef nat_dlal_type();   // forall a. (a -o a) => $(a -o a)
DlalRef word_dlal_type();  // forall a. (a -o a) => (a -o a) => $(a -o a)

}  // namespace dlal
