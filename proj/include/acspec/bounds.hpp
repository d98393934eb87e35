#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acspec/groupoid.hpp"
#include "acspec/sequences.hpp"
#include "acspec/spectrum.hpp"

namespace acspec {

enum class ProfileKind {
  identity_row,        // preconditions are catalog identities
  depth_hypothesis,    // precondition is a depth-congruence implication
  factorial_relation,  // s^ac_n <= n! * s^a_n, no precondition
};

/// One verifiable bound statement: preconditions, bound oracles for both
/// spectra, the n from which each bound is attained with equality, and the
/// groupoids expected to attain them.
struct BoundProfile {
  std::string name;
  ProfileKind kind = ProfileKind::identity_row;
  std::vector<std::string> identity_labels;
  DepthClassKind hypothesis_kind = DepthClassKind::full;  // depth rows only
  int hypothesis_modulus = 0;
  PiecewiseOracle assoc_bound, ac_bound;
  int start_assoc = 1, start_ac = 1;  // equality expected from here on
  std::vector<std::string> witnesses;
  bool implication = true;  // ac equality forces assoc equality
};

const BoundProfile& profile(const std::string& name);
const std::vector<std::string>& profile_names();

enum class Verdict { attains, bounded, hypothesis_not_met, violation };

std::string to_string(Verdict v);

struct BoundLine {
  int n;
  uint64_t value;
  std::string bound;  // exact bound value as decimal text (can exceed 64 bits)
  char rel;           // '<', '=', '>'
};

struct VerificationReport {
  std::string profile;
  std::string groupoid;
  std::vector<std::pair<std::string, bool>> identity_checks;
  std::optional<bool> hypothesis_pass;
  std::vector<BoundLine> assoc_lines, ac_lines;
  Verdict verdict = Verdict::bounded;
  bool expected_attains = false;
  bool truncated = false;
  std::string note;
};

/// Replays one profile against a groupoid: precondition checks, both spectra
/// against the bound oracles on their domains, equality from the start
/// columns, and the equality implication.
VerificationReport verify(const BoundProfile& p, const Groupoid& g, int nmax_assoc, int nmax_ac,
                          const SpectrumOptions& opts = {});

/// Every profile against every witness, the factorial relation against every
/// registry groupoid, and the hypothesis-free tree enumeration checks.
std::vector<VerificationReport> verify_all(int nmax_assoc, int nmax_ac,
                                           const SpectrumOptions& opts = {});

/// True when no report is a violation and every expected attainment holds.
bool all_reports_pass(const std::vector<VerificationReport>& reports);

}  // namespace acspec
