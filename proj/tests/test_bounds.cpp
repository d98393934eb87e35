#include <doctest.h>

#include <algorithm>

#include "acspec/bounds.hpp"

using namespace acspec;

TEST_CASE("profile catalog") {
  CHECK(profile_names().size() == 18);

  const BoundProfile& t44 = profile("Thm4.4");
  CHECK(t44.identity_labels == std::vector<std::string>{"3", "7", "12"});
  CHECK(t44.witnesses == std::vector<std::string>{"SC271", "SC356"});
  CHECK(t44.ac_bound(6) == 186);
  CHECK(t44.assoc_bound(6) == 16);

  const BoundProfile& p51 = profile("Prop5.1");
  CHECK(p51.identity_labels == std::vector<std::string>{"2", "11"});
  CHECK(p51.witnesses == std::vector<std::string>{"SC79", "SC1701"});
  CHECK(p51.assoc_bound(8) == 33);   // F_9 - 1
  CHECK(p51.ac_bound(6) == 75);      // B_{6,2} - 1

  const BoundProfile& t12 = profile("Thm1.2");
  CHECK(t12.identity_labels == std::vector<std::string>{"2"});
  CHECK(t12.witnesses == std::vector<std::string>{"SC1108", "SC2407", "SC3093"});
  CHECK(t12.ac_bound(7) == 10395);

  CHECK(profile("Thm6.4").start_assoc == 2);
  CHECK(profile("Thm6.4").ac_bound.domain_start() == 1);
  CHECK(profile("Thm6.2").hypothesis_modulus == 3);
  CHECK(profile("Thm7.1").kind == ProfileKind::factorial_relation);
  CHECK_THROWS_AS(profile("Prop9.9"), std::invalid_argument);

  int identity_rows = 0, depth_rows = 0, factorial_rows = 0;
  for (const std::string& name : profile_names()) {
    const BoundProfile& p = profile(name);
    switch (p.kind) {
      case ProfileKind::identity_row: ++identity_rows; break;
      case ProfileKind::depth_hypothesis: ++depth_rows; break;
      case ProfileKind::factorial_relation: ++factorial_rows; break;
    }
    CHECK(p.implication);
    for (const std::string& w : p.witnesses) CHECK_NOTHROW(registry(w));
  }
  CHECK(identity_rows == 14);  // thirteen identity rows plus the commutative bound
  CHECK(depth_rows == 3);
  CHECK(factorial_rows == 1);
}

TEST_CASE("every witness satisfies its row's identities") {
  for (const std::string& name : profile_names()) {
    const BoundProfile& p = profile(name);
    if (p.kind != ProfileKind::identity_row) continue;
    for (const std::string& w : p.witnesses)
      for (const std::string& label : p.identity_labels) {
        INFO(name, " witness ", w, " identity ", label);
        CHECK(satisfies_identity(registry(w), catalog_identity(label)));
      }
  }
}

TEST_CASE("verify attaining witnesses") {
  VerificationReport r = verify(profile("Thm4.4"), registry("SC271"), 6, 6);
  CHECK(r.verdict == Verdict::attains);
  REQUIRE(r.identity_checks.size() == 3);
  for (const auto& [label, pass] : r.identity_checks) CHECK(pass);
  REQUIRE(!r.ac_lines.empty());
  std::vector<uint64_t> ac_vals;
  for (const BoundLine& l : r.ac_lines) ac_vals.push_back(l.value);
  CHECK(ac_vals == std::vector<uint64_t>{2, 9, 28, 75, 186});  // n = 2..6

  CHECK(verify(profile("Prop3.1"), registry("SC275"), 6, 6).verdict == Verdict::attains);
  CHECK(verify(profile("Prop3.3"), registry("SC405"), 7, 6).verdict == Verdict::attains);
  CHECK(verify(profile("Thm1.2"), registry("SC1108"), 7, 7).verdict == Verdict::attains);
}

TEST_CASE("verify rejects non-members") {
  VerificationReport r = verify(profile("Thm4.4"), registry("SC2302"), 5, 5);
  CHECK(r.verdict == Verdict::hypothesis_not_met);
  // the failing precondition is the inner-reassociation identity
  for (const auto& [label, pass] : r.identity_checks) {
    if (label == "7") CHECK_FALSE(pass);
    if (label == "12") CHECK(pass);  // holds here even though membership fails
  }
  CHECK(verify(profile("Prop3.4"), registry("SC170"), 5, 5).verdict ==
        Verdict::hypothesis_not_met);
}

TEST_CASE("verify depth-hypothesis profiles") {
  VerificationReport r = verify(profile("Thm6.4"), registry("SC2346"), 7, 7);
  REQUIRE(r.hypothesis_pass.has_value());
  CHECK(*r.hypothesis_pass);
  CHECK(r.verdict == Verdict::attains);
  std::vector<uint64_t> a_vals;
  for (const BoundLine& l : r.assoc_lines) a_vals.push_back(l.value);
  CHECK(a_vals == std::vector<uint64_t>{1, 2, 5, 10, 21, 42});  // n = 2..7

  CHECK(verify(profile("Thm6.1"), registry("SC2302"), 8, 6).verdict == Verdict::attains);
  CHECK(verify(profile("Thm6.2"), registry("SC3242"), 8, 6).verdict == Verdict::attains);
  // a groupoid whose tables ignore depths entirely fails the scan's converse
  VerificationReport bad = verify(profile("Thm6.4"), registry("SC275"), 5, 5);
  REQUIRE(bad.hypothesis_pass.has_value());
  CHECK_FALSE(*bad.hypothesis_pass);
  CHECK(bad.verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("factorial relation") {
  VerificationReport r = verify(profile("Thm7.1"), registry("SC64"), 5, 5);
  CHECK(r.verdict != Verdict::violation);
  REQUIRE(r.ac_lines.size() == 5);
  CHECK(r.ac_lines[2].bound == "12");  // 3! * s^a_3 = 12

  Groupoid monoid(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, "M");
  VerificationReport m = verify(profile("Thm7.1"), monoid, 5, 5);
  CHECK(m.verdict == Verdict::attains);  // noncommutative with a neutral element
}

TEST_CASE("verify_all at quick depth") {
  std::vector<VerificationReport> reports = verify_all(5, 4);
  CHECK(all_reports_pass(reports));
  int tree_checks = 0, thm71 = 0, witness_runs = 0;
  for (const auto& r : reports) {
    CHECK(r.verdict != Verdict::violation);
    if (r.groupoid == "(trees)") ++tree_checks;
    if (r.profile == "Thm7.1") ++thm71;
    if (r.expected_attains && r.groupoid != "(trees)") ++witness_runs;
    if (r.expected_attains) CHECK(r.verdict == Verdict::attains);
  }
  CHECK(tree_checks == 5);  // three moduli for right depths, two full-depth checks
  CHECK(thm71 == 52);
  CHECK(witness_runs == 27);
}

TEST_CASE("pass logic") {
  VerificationReport good{.profile = "p", .groupoid = "g", .verdict = Verdict::attains,
                          .expected_attains = true};
  VerificationReport meh{.profile = "p", .groupoid = "g", .verdict = Verdict::bounded,
                         .expected_attains = false};
  VerificationReport bad = meh;
  bad.expected_attains = true;
  VerificationReport viol = meh;
  viol.verdict = Verdict::violation;
  CHECK(all_reports_pass({good, meh}));
  CHECK_FALSE(all_reports_pass({good, bad}));
  CHECK_FALSE(all_reports_pass({good, viol}));
}
