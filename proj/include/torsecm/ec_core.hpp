#ifndef TORSECM_EC_CORE_HPP
#define TORSECM_EC_CORE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "torsecm/numth.hpp"

namespace torsecm {

class SingularCurveError : public Error {
 public:
  using Error::Error;
};
class BadReductionError : public Error {
 public:
  using Error::Error;
};
class NotSquarefreeError : public Error {
 public:
  using Error::Error;
};

struct RationalPoint {
  bool infinity = true;
  Rat x, y;

  static RationalPoint at_infinity() { return RationalPoint{}; }
  static RationalPoint affine(Rat px, Rat py) {
    return RationalPoint{false, std::move(px), std::move(py)};
  }
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with exact rational coefficients.  Nonsingular by construction.
class RationalWeierstrass {
 public:
  RationalWeierstrass(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);

  static RationalWeierstrass short_curve(Rat a, Rat b) {
    return RationalWeierstrass(0, 0, 0, std::move(a), std::move(b));
  }

  const Rat& a1() const { return a1_; }
  const Rat& a2() const { return a2_; }
  const Rat& a3() const { return a3_; }
  const Rat& a4() const { return a4_; }
  const Rat& a6() const { return a6_; }

  Rat b2() const;
  Rat b4() const;
  Rat b6() const;
  Rat b8() const;
  Rat c4() const;
  Rat c6() const;
  Rat discriminant() const;
  Rat j_invariant() const;

  bool is_short() const { return a1_ == 0 && a2_ == 0 && a3_ == 0; }
  bool is_integral() const;

  bool contains(const RationalPoint& p) const;

  RationalPoint negate(const RationalPoint& p) const;
  RationalPoint add(const RationalPoint& p, const RationalPoint& q) const;
  RationalPoint scalar_mul(const Int& k, const RationalPoint& p) const;

  // (x, y) -> (s^2 x, s^3 y) with the least positive s making all
  // coefficients integral.
  std::pair<RationalWeierstrass, Int> integral_model() const;

  // Isomorphic short model y^2 = x^3 - 27 c4 x - 54 c6; points map by
  // to_short_form.
  RationalWeierstrass short_form() const;
  RationalPoint to_short_form(const RationalPoint& p) const;

  // y^2 = x^3 + A d^2 x + B d^3; requires short form, d nonzero squarefree.
  RationalWeierstrass quadratic_twist(const Int& d) const;

  // "a1=n/d a2=... a3=... a4=... a6=..." - bit-exact round trip.
  std::string to_record() const;
  static RationalWeierstrass from_record(const std::string& text);

  friend bool operator==(const RationalWeierstrass& a,
                         const RationalWeierstrass& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ &&
           a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  Rat a1_, a2_, a3_, a4_, a6_;
};

// Curve y^2 = x^3 + Ax + B over Z/NZ, N >= 2 (prime or composite).
struct ModCurve {
  Int n;
  Int A;
  Int B;
};

struct ModPoint {
  bool infinity = true;
  Int x, y;

  static ModPoint at_infinity() { return ModPoint{}; }
  static ModPoint affine(Int px, Int py) {
    return ModPoint{false, std::move(px), std::move(py)};
  }
  friend bool operator==(const ModPoint& a, const ModPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// A non-invertible denominator mod composite N: the ECM factor channel.
struct FactorFound {
  Int g;
};

using GroupResult = std::variant<ModPoint, FactorFound>;

bool on_curve(const ModCurve& c, const ModPoint& p);
ModPoint mod_negate(const ModCurve& c, const ModPoint& p);
GroupResult mod_add(const ModCurve& c, const ModPoint& p, const ModPoint& q);
GroupResult mod_scalar_mul(const ModCurve& c, const Int& k, const ModPoint& p);

// Good reduction at a prime p > 3; throws BadReductionError when p divides
// the integral model's discriminant.
ModCurve reduce_mod(const RationalWeierstrass& e, std::uint64_t p);

// Reduction mod arbitrary N >= 2 with gcd(N, 6) = 1.  A non-invertible
// denominator surfaces as FactorFound.
std::variant<ModCurve, FactorFound> reduce_mod_n(const RationalWeierstrass& e,
                                                 const Int& n);
std::variant<ModPoint, FactorFound> reduce_point(const RationalWeierstrass& e,
                                                 const RationalPoint& p,
                                                 const Int& n);

}  // namespace torsecm

#endif
