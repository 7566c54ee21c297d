#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfinv {

using Rat = mpq_class;
using Int = mpz_class;

/// Exact rational helpers on top of GMP.
Rat rat(long num, long den = 1);
std::string rat_to_string(const Rat& r);
std::optional<Rat> rat_from_string(std::string_view s);

/// Element of the cyclotomic field Q(zeta_N), stored as a vector of
/// phi(N) rationals: the coordinates in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th cyclotomic polynomial.
///
/// The conductor N is part of the value.  Two elements with the same
/// conductor are equal iff their coordinate vectors are equal; elements
/// with different conductors are compared after lifting both to the lcm.
/// Arithmetic between mixed conductors lifts automatically.
class Cyc {
 public:
  Cyc();                       // zero at conductor 1
  explicit Cyc(const Rat& r);  // rational, conductor 1
  explicit Cyc(long n);

  /// zeta_N^k (k may be any integer; it is reduced mod N).
  static Cyc zeta(long N, long k = 1);

  /// sum coeffs[k] * zeta_N^k; coeffs may have any length, exponents
  /// reduce mod N and then modulo the cyclotomic polynomial.
  static Cyc from_powers(long N, const std::vector<Rat>& coeffs);

  /// Construct directly from a reduced coordinate vector of length
  /// phi(N).  Throws if the length is wrong.
  static Cyc from_coords(long N, std::vector<Rat> coords);

  long conductor() const { return n_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_rational_integer() const;
  /// True when the element lies in the ring Z[zeta_N]; the power basis
  /// generates the full ring of integers, so this is integer coordinates.
  bool is_algebraic_integer() const;
  std::optional<Rat> as_rational() const;

  /// Same element expressed in Q(zeta_M); requires N | M.
  Cyc lifted(long M) const;
  /// Attempt to rewrite with conductor M (requires M | N); empty if the
  /// element does not lie in the subfield.
  std::optional<Cyc> lowered(long M) const;
  /// Smallest conductor representation (minimum over divisors of N).
  Cyc minimized() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }

  /// Multiplicative inverse; throws on zero.
  Cyc inverse() const;
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Renders per the scalar text grammar: a rational is "a/b" or "a";
  /// otherwise terms "c*z{N}^k" joined with " + " / " - ".
  std::string to_string() const;
  /// Parses the same grammar.  Empty on syntax error.
  static std::optional<Cyc> parse(std::string_view s);

  /// Total order on (conductor, coords); used only for deterministic
  /// container ordering, not a field order.
  static int compare(const Cyc& a, const Cyc& b);

 private:
  Cyc(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  long n_;
  std::vector<Rat> c_;
};

/// Arithmetic nature of a scalar; the three flags are cumulative in the
/// order rational_integer => rational and => algebraic_integer.
struct Classification {
  bool rational = false;
  bool rational_integer = false;
  bool algebraic_integer = false;
};

Classification classify(const Cyc& x);

/// True when x lies in Z[zeta_n] inside its ambient field: x must lower
/// to conductor dividing n and have integer coordinates there.
bool in_integer_ring(const Cyc& x, long n);

/// phi(N), and the N-th cyclotomic polynomial as monic integer
/// coefficients c[0..phi(N)] with c[phi(N)] = 1.  Cached internally.
long euler_phi(long N);
const std::vector<Int>& cyclotomic_polynomial(long N);

long lcm_long(long a, long b);

}  // namespace hopfinv
