#ifndef TORSECM_ECM_HPP
#define TORSECM_ECM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsecm/ec_core.hpp"

namespace torsecm {

class BadEcmInputError : public Error {
 public:
  using Error::Error;
};

// Curve source for a run: catalog labels (with their known points), or a
// family spec "family:param1,param2,..." expanded through the generators.
struct EcmConfig {
  std::uint64_t b1 = 10000;
  std::optional<std::uint64_t> b2;  // stage 2 bound, > b1 when present
  std::size_t max_curves = 20;
  std::vector<std::string> catalog_labels;  // empty = family source
  std::string family;                       // e.g. "4x8"
  std::vector<Rat> family_params;

  void validate() const;
};

struct EcmFactor {
  Int g;
  std::string curve;
  int stage = 1;
};
struct EcmFullCollapse {
  std::string curve;
};
struct EcmExhausted {
  std::size_t curves_tried = 0;
};
using EcmOutcome = std::variant<EcmFactor, EcmFullCollapse, EcmExhausted>;

// Curves without a known or searchable point are skipped, with a record.
struct EcmSkip {
  std::string curve;
  std::string reason;
};

struct EcmReport {
  EcmOutcome outcome;
  std::vector<EcmSkip> skipped;
};

// Survived stage 1/2: the working point mod N.
struct Survived {
  ModCurve curve;
  ModPoint point;
};
using StageResult = std::variant<Survived, EcmFactor, EcmFullCollapse>;

// Multiplies the reduction of P by q^floor(log_q B1) for each prime
// q <= B1, one prime power at a time in ascending order, checking for a
// factor after each step.  Requires gcd(N, 6) = 1.
StageResult stage1(const Int& n, const RationalWeierstrass& e,
                   const RationalPoint& p, std::uint64_t b1);

// Simple continuation: tests q * (stage-1 point) for every prime q in
// (B1, B2], reusing incremental gap differences.
StageResult stage2(const Int& n, const Survived& s, std::uint64_t b1,
                   std::uint64_t b2);

EcmReport ecm_run(const Int& n, const EcmConfig& config);

std::string format_outcome(const EcmOutcome& outcome);

}  // namespace torsecm

#endif
