#ifndef PACAL_LIMITS_HPP
#define PACAL_LIMITS_HPP

#include <functional>
#include <string>
#include <vector>

#include "pacal/linalg.hpp"

namespace pacal {

//! Parameters for Richardson-extrapolated difference-quotient limits.
struct LimitConfig {
  double h0 = 1e-2;   //!< base step
  int levels = 8;     //!< extrapolation depth, at most 12
  double tol = 1e-9;  //!< convergence tolerance on successive diagonal entries
  double ratio = 2.0; //!< step shrink factor, > 1
  //! When set, quotients are assumed to expand in even powers of the step
  //! (central differences); the default assumes a full power series.
  bool symmetric = false;
};

//! Result of a limit evaluation, with the quotient table kept for diagnostics.
struct LimitEstimate {
  Vec value;                 //!< best extrapolant
  double err = 0.0;          //!< estimated absolute error (inf norm)
  bool converged = false;    //!< err <= tol was reached
  std::vector<double> taus;      //!< sampled step sizes
  std::vector<Vec> quotients;    //!< raw quotients q(tau)
  std::vector<Vec> diagonal;     //!< Neville tableau diagonal
  std::string describe() const;  //!< printable quotient table
};

//! Richardson limit of quotient(tau) as tau -> 0+ over tau = h0 / ratio^k.
//! The best diagonal entry is returned even when convergence fails, so the
//! caller decides whether non-convergence is an error.
LimitEstimate richardson_limit(const std::function<Vec(double)>& quotient,
                               const LimitConfig& cfg = {});

//! As above but throws limit_failure_error (with the table attached) unless
//! the estimate converged. `what` names the quantity being computed.
Vec require_limit(const std::function<Vec(double)>& quotient, const LimitConfig& cfg,
                  const std::string& what);

} // namespace pacal

#endif
