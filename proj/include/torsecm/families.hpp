#ifndef TORSECM_FAMILIES_HPP
#define TORSECM_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "torsecm/census.hpp"
#include "torsecm/ec_core.hpp"

namespace torsecm {

// Degenerate parameter: the message names the vanishing factor.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};
class ConditionNotSatisfiedError : public Error {
 public:
  using Error::Error;
};

// Torsion group Z/m + Z/n (m | n) attained over the described field.
struct TorsionLabel {
  unsigned m = 1;
  unsigned n = 1;
  std::string field = "Q";
};

struct CatalogEntry {
  std::string label;
  RationalWeierstrass curve;
  TorsionLabel torsion_q;    // over Q
  TorsionLabel torsion_ext;  // over the extension field
  // p splits completely in the extension field iff all conditions hold
  std::vector<Condition> split;
  std::vector<RationalPoint> known_points;  // on-curve, infinite order
  std::string source;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& label);
std::vector<std::string> catalog_labels();

// Structured text serialization of the catalog (one record per entry).
std::string catalog_to_text();

// --- Z/4+Z/8 generator ------------------------------------------------
// v = (t^4-6t^2+1)/(4(t^2+1)^2), a = v^2 - 1/16,
// curve y^2 + xy - ay = x^3 - ax^2; torsion Z/4+Z/8 over
// Q(i, sqrt(t^4-6t^2+1)).
struct Gen4x8Result {
  RationalWeierstrass curve;
  std::string point_field;
};
Gen4x8Result gen_4x8(const Rat& t);

// --- Z/3+Z/3 ----------------------------------------------------------
// Y^2 = X^3+(108+T^6)X^2+(144T^6+3888)X+64T^12+3456T^6+46656 with
// 3-torsion points (-4T^4+12T^2-36, +-(4T^7-12T^5+36T^3)) and free point
// (0, 8T^6+216).
struct Rabarison3x3Result {
  RationalWeierstrass curve;
  std::array<RationalPoint, 2> torsion_points;
  RationalPoint free_point;
};
Rabarison3x3Result rabarison_3x3(const Rat& T);

// Parametrization of the conic 13T^2 - 42T + 93 = z^2.
struct ParamTResult {
  Rat T;
  Rat z;
};
ParamTResult param_T(const Rat& u);

// Rank-2 subfamily over u: y^2 = x^3 + a2(u) x^2 + a4(u) x + a6(u) with
// two explicit points of infinite order.
struct Gen3x3Rank2Result {
  RationalWeierstrass curve;
  RationalPoint p1;
  RationalPoint p2;
};
Gen3x3Rank2Result gen_3x3_rank2(const Rat& u);

// --- Z/3+Z/6 ----------------------------------------------------------
enum class Variant3x6 { I, II, III };
Variant3x6 parse_variant_3x6(const std::string& text);
std::string variant_3x6_name(Variant3x6 v);

// The square condition attached to a variant's chosen factor b1 of B.
Rat cond_3x6(const Rat& T, Variant3x6 v);

struct Gen3x6Result {
  RationalWeierstrass curve;  // y^2 = x^3 + A x^2 + B x
  RationalPoint point;
};
// Requires z^2 = cond_3x6(T, v); Delta(T) != 0.
Gen3x6Result gen_3x6(const Rat& T, Variant3x6 v, const Rat& z);

// --- Z/6+Z/6 over Q(sqrt(-3), sqrt(Delta)) -----------------------------
struct Gen6x6Result {
  RationalWeierstrass curve;
  std::string field;  // "Q(sqrt(-3), sqrt(d))"
  Int d;              // squarefree kernel of the discriminant
};
Gen6x6Result gen_6x6(const Rat& T, Variant3x6 v, const Rat& z);

// --- Z/5+Z/5 family -----------------------------------------------------
// y^2 = x^3 + A(T) x + B(T); the extra nontorsion point exists iff
// T^5 - 18 is a rational square.
struct FiveFiveResult {
  RationalWeierstrass curve;
  Rat extra_point_condition;  // T^5 - 18
};
FiveFiveResult fivefive_family(const Rat& T);

}  // namespace torsecm

#endif
