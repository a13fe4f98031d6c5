#ifndef QJ_ERRORS_HPP
#define QJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qj {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of an operation
// (non-monic polynomial where monic is required, zero inverse, ...).
struct domain_error : error {
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// The requested result is not determined by the coefficients we know.
// Callers can retry with a higher-precision source.
struct precision_error : error {
  explicit precision_error(const std::string& msg) : error(msg) {}
};

// A computation would exceed a hard resource bound (series length,
// enumeration size).  Distinct from precision_error: retrying at the
// same precision will not help.
struct resource_error : error {
  explicit resource_error(const std::string& msg) : error(msg) {}
};

// An internal cross-check failed: two routes that must agree did not,
// or a structural identity the computation relies on was violated.
struct consistency_error : error {
  explicit consistency_error(const std::string& msg) : error(msg) {}
};

} // namespace qj

#endif
