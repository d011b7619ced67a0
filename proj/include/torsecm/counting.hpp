#ifndef TORSECM_COUNTING_HPP
#define TORSECM_COUNTING_HPP

#include "torsecm/ec_core.hpp"

namespace torsecm {

class BadCurveError : public Error {
 public:
  using Error::Error;
};
class InvalidMultipleError : public Error {
 public:
  using Error::Error;
};

// |E(F_p)| by the Legendre character sum; p prime, p <= 10^6.
std::uint64_t count_naive(const ModCurve& c);

// |E(F_p)| by baby-step giant-step order finding (Shanks-Mestre
// disambiguation via random points and the quadratic twist).
std::uint64_t count_bsgs(const ModCurve& c);

// Least n > 0 with n P = infinity, given a multiple M of the group order
// (strips prime factors from M).  Throws InvalidMultipleError when
// M P != infinity.
Int point_order(const ModCurve& c, const ModPoint& p, const Int& m);

// Open Hasse interval bounds as integers: all admissible group orders lie
// in [first, second].
std::pair<std::uint64_t, std::uint64_t> hasse_interval(std::uint64_t p);

}  // namespace torsecm

#endif
