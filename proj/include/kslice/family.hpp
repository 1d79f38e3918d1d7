#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kslice/exact/abelian_group.hpp"
#include "kslice/seifert.hpp"

namespace kslice {

// The knots K_m, given by the Seifert matrix [[0, m+1], [m, 0]].

struct FamilyParams {
  long m = 1;
  /// m odd: the regime in which the slice-disc theorem is stated.
  bool odd_regime = true;
};

/// Throws InvalidInput for m < 1.
FamilyParams family_params(long m);

SeifertMatrix family_seifert(long m);

struct FamilyExpected {
  IntLaurent delta;           // m(m+1) t^2 - ((m+1)^2 + m^2) t + m(m+1)
  AbelianGroup cover_group;   // (Z/N_r)^2, trivial when N_r = 1
  Integer n_r;                // (m+1)^r - m^r
};

/// Closed forms only; nothing here touches a matrix.
FamilyExpected family_expected(long m, long r);

/// Pairwise distinct Alexander polynomials.  Throws InvalidInput on a
/// repeated or non-positive m.
bool distinctness_check(const std::vector<long>& ms);

enum class StepStatus { verified, failed, external_assumption };

std::string to_string(StepStatus s);
/// Throws InvalidInput for an unknown name.
StepStatus step_status_from_string(const std::string& s);

/// Payload entries are canonical strings so reports compare and print stably.
using Payload = std::vector<std::pair<std::string, std::string>>;

struct ReportStep {
  std::string name;
  StepStatus status = StepStatus::verified;
  Payload payload;

  friend bool operator==(const ReportStep&, const ReportStep&) = default;
};

struct CoverSubreport {
  long r = 0;
  std::vector<ReportStep> steps;

  friend bool operator==(const CoverSubreport&, const CoverSubreport&) = default;
};

struct ObstructionReport {
  long m = 0;
  bool odd_regime = true;
  std::vector<long> cover_degrees;
  std::vector<std::string> warnings;
  std::vector<ReportStep> checks;        // module-level steps, in order
  std::vector<CoverSubreport> covers;    // one per cover degree, input order
  std::vector<ReportStep> external;      // literature the argument leans on
  std::string conclusion;

  bool has_failure() const;
  std::size_t external_count() const { return external.size(); }

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

inline constexpr const char* kConclusionComplete = "contradiction schema complete modulo external steps";

/// Runs every computable step for K_m and the given prime cover degrees.
/// The first failed step ends the run; later steps are omitted and the
/// conclusion names the failure.  Throws InvalidInput for m < 1, an empty,
/// repeated or non-prime degree list.
ObstructionReport obstruction_report(long m, const std::vector<long>& cover_degrees);

}  // namespace kslice
