#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <string>
#include <type_traits>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace amnm {

/// Exact rational number. Used where certified values are exact powers or
/// quotients of the inputs.
using Rational = mpq_class;

template <class T>
inline constexpr bool is_rational_v = std::is_same_v<std::remove_cvref_t<T>, Rational>;

/// Square root of q when q is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

inline double to_double(double x) { return x; }
/// Nearest double (ties to even); mpq's own conversion truncates.
double to_double(const Rational& q);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p/q", "p", or a finite decimal such as "0.01".
Rational parse_rational(const std::string& text);

}  // namespace amnm
