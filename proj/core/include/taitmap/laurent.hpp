#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "taitmap/planar_map.hpp"
#include "taitmap/tait.hpp"

namespace taitmap {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Z[q, q^-1]: exponent -> coefficient with no zero coefficients
/// stored, so equality is structural.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(BigInt constant);

  static LaurentPoly monomial(BigInt coefficient, Exponent exponent);
  /// The variable q.
  static LaurentPoly q() { return monomial(1, 1); }

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  BigInt coefficient(Exponent e) const;
  bool is_zero() const { return terms_.empty(); }

  /// q -> q^-1.
  LaurentPoly mirrored() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    return out *= b;
  }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly&) const = default;

 private:
  void add_term(Exponent e, const BigInt& c);

  std::map<Exponent, BigInt> terms_;
};

/// [n] = q^(n-1) + q^(n-3) + ... + q^(1-n), n >= 1.
LaurentPoly quantum_integer(std::int64_t n);

/// Exact value at a nonzero rational point.
Rational evaluate(const LaurentPoly& p, const Rational& q0);

/// Descending exponents, e.g. "q^3 + 2*q + 2*q^-1 + q^-3"; zero prints "0".
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& out, const LaurentPoly& p);

/// Inverse of to_string; also accepts repeated exponents and spacing variants.
LaurentPoly parse_laurent(std::string_view text);

/// Accepts "a" or "a/b" with optional sign.
Rational parse_rational(std::string_view text);

/// The sl3 web polynomial through the loop, digon and square relations.
/// Throws kNotBipartite for non-bipartite input and kNonPlanar for non-planar.
LaurentPoly p3(const CombinatorialMap& map);

}  // namespace taitmap
