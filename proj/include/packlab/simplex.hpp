#pragma once

#include <vector>

#include "packlab/rational.hpp"

namespace packlab {

struct EqFeasResult {
  bool feasible = false;
  std::vector<Rational> x;       // solution of A x = b, x >= 0
  std::vector<Rational> farkas;  // infeasible: y with y^T A <= 0 and y^T b > 0
};

// Phase-1 simplex with Bland's rule, exact rationals throughout.
EqFeasResult solve_equality_feasibility(const std::vector<std::vector<Rational>>& A,
                                        const std::vector<Rational>& b);

struct MaxResult {
  bool bounded = false;
  Rational value;
  std::vector<Rational> x;
};

// maximize c^T x subject to A x <= b, x >= 0; requires b >= 0
MaxResult maximize_leq(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace packlab
