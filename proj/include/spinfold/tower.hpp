#pragma once

#include "spinfold/wps.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace spinfold {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int column) : std::runtime_error(what), column(column) {}
  int column; // 1-based within the parsed text
};

struct Term {
  int var = 0;
  int exp = 1;
  Cyclotomic coeff{1};
  bool generic = false;
};

/// A generic polynomial of the equation's degree in the listed variables.
struct GenericBlock {
  std::string name;
  std::vector<int> vars;
};

struct FermatEquation {
  std::vector<Term> terms;
  std::vector<GenericBlock> blocks;

  const Term* term_of(int v) const;
  bool mentions(int v) const;
  bool has_generic() const;
  bool empty() const { return terms.empty() && blocks.empty(); }
  std::string str() const;
};

struct PlanStep {
  int equation = 0; // 0-based
  int variable = 0;
  bool eliminate = false; // allow the variable in later equations, removed by recombination
};

struct FermatTower {
  WeightSystem ambient;
  std::vector<FermatEquation> equations;
  std::vector<PlanStep> plan;

  int dimension() const { return ambient.m() - static_cast<int>(equations.size()); }
  bool has_generic_blocks() const;
  bool has_generic_terms() const;
  /// drop terms and blocks outside the support; blocks keep their surviving variables
  FermatTower restricted(const std::vector<int>& support) const;
};

/// "z0^12 + 2i*z1^12 - e(1/8)*z2^3 + ~z3^2 + ~P(z4,z5)"
FermatEquation parse_equation(const std::string& text);
/// z_j^{d/a_j} with d the weight sum; requires a_j | d
FermatTower fermat_hypersurface(const WeightSystem& w);
FermatTower fermat_hypersurface(const WeightSystem& w, const std::vector<int>& exponents);

} // namespace spinfold
