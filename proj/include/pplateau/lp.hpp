#ifndef PPLATEAU_LP_HPP
#define PPLATEAU_LP_HPP

#include "pplateau/scalar.hpp"

#include <vector>

namespace pplateau {

/// minimize c·x subject to A x = b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational objective{0};
  std::vector<Rational> x;
};

/// Two-phase dense tableau simplex in exact rational arithmetic with Bland's
/// rule, so it terminates on degenerate problems.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace pplateau

#endif
