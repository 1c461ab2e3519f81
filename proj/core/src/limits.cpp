#include "pacal/limits.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pacal/errors.hpp"

namespace pacal {

namespace {
void validate(const LimitConfig& cfg) {
  if (!(cfg.h0 > 0.0)) throw usage_error("LimitConfig: h0 must be positive");
  if (cfg.levels < 2 || cfg.levels > 12) throw usage_error("LimitConfig: levels must be in [2, 12]");
  if (!(cfg.tol > 0.0)) throw usage_error("LimitConfig: tol must be positive");
  if (!(cfg.ratio > 1.0)) throw usage_error("LimitConfig: ratio must exceed 1");
}
} // namespace

std::string LimitEstimate::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "k tau quotient diagonal\n";
  for (std::size_t k = 0; k < taus.size(); ++k) {
    os << k << " " << taus[k] << " [";
    for (int i = 0; i < quotients[k].dim(); ++i) os << (i ? "," : "") << quotients[k][i];
    os << "] [";
    for (int i = 0; i < diagonal[k].dim(); ++i) os << (i ? "," : "") << diagonal[k][i];
    os << "]\n";
  }
  os << "converged=" << (converged ? "yes" : "no") << " err=" << err;
  return os.str();
}

LimitEstimate richardson_limit(const std::function<Vec(double)>& quotient, const LimitConfig& cfg) {
  validate(cfg);
  const int porder = cfg.symmetric ? 2 : 1;

  LimitEstimate est;
  std::vector<std::vector<Vec>> tableau;
  double tau = cfg.h0;
  double best_err = 0.0;
  bool have_best = false;

  for (int k = 0; k < cfg.levels; ++k, tau /= cfg.ratio) {
    const Vec q = quotient(tau);
    est.taus.push_back(tau);
    est.quotients.push_back(q);

    std::vector<Vec> row;
    row.push_back(q);
    for (int j = 1; j <= k; ++j) {
      const Vec& fine = row[static_cast<std::size_t>(j - 1)];
      const Vec& coarse = tableau[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
      const double denom = std::pow(cfg.ratio, porder * j) - 1.0;
      row.push_back(fine + (1.0 / denom) * (fine - coarse));
    }
    est.diagonal.push_back(row.back());

    if (k >= 1) {
      const double diff = (row.back() - tableau.back().back()).norm_inf();
      if (!have_best || diff < best_err) {
        best_err = diff;
        est.value = row.back();
        have_best = true;
      }
      if (diff <= cfg.tol) {
        est.err = diff;
        est.converged = true;
        est.value = row.back();
        tableau.push_back(std::move(row));
        return est;
      }
    }
    tableau.push_back(std::move(row));
  }

  est.err = have_best ? best_err : std::numeric_limits<double>::infinity();
  if (!have_best) est.value = est.diagonal.empty() ? Vec() : est.diagonal.back();
  est.converged = est.err <= cfg.tol;
  return est;
}

Vec require_limit(const std::function<Vec(double)>& quotient, const LimitConfig& cfg,
                  const std::string& what) {
  LimitEstimate est = richardson_limit(quotient, cfg);
  if (!est.converged) {
    throw limit_failure_error(what + ": difference-quotient limit did not converge (err=" +
                                  std::to_string(est.err) + ", tol=" + std::to_string(cfg.tol) + ")",
                              est.describe());
  }
  return est.value;
}

} // namespace pacal
