#ifndef PACAL_ERRORS_HPP
#define PACAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pacal {

//! Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

//! Malformed input: dimension mismatch, bad configuration, invalid arguments.
class usage_error : public error {
public:
  explicit usage_error(const std::string& what) : error(what) {}
};

//! A displacement left the chart. Carries the offending coordinates.
class domain_exit_error : public error {
public:
  domain_exit_error(const std::string& what, std::vector<double> where)
      : error(what), offending_point(std::move(where)) {}
  std::vector<double> offending_point;
};

//! Numerical breakdown: singular frame, ill-conditioned solve, broken identity.
class numeric_error : public error {
public:
  explicit numeric_error(const std::string& what) : error(what) {}
};

//! A difference-quotient limit failed to converge. Carries the quotient table.
class limit_failure_error : public numeric_error {
public:
  limit_failure_error(const std::string& what, std::string diagnostics = {})
      : numeric_error(what), diagnostics(std::move(diagnostics)) {}
  std::string diagnostics;
};

} // namespace pacal

#endif
