#include <doctest.h>

#include <cstdint>
#include <set>

#include "acspec/sequences.hpp"
#include "acspec/term.hpp"

using namespace acspec;

namespace {

Term T(const char* s) { return parse_term(s); }

// independent count of bracketings by the split recurrence
uint64_t brute_count(int n) {
  if (n == 1) return 1;
  uint64_t total = 0;
  for (int l = 1; l < n; ++l) total += brute_count(l) * brute_count(n - l);
  return total;
}

}  // namespace

TEST_CASE("construction and equality") {
  Term a = Term::node(Term::leaf(1), Term::leaf(2));
  Term b = T("x1 x2");
  CHECK(a == b);
  CHECK(a != T("x2 x1"));
  CHECK(a.size() == 2);
  CHECK(a.leftmost_var() == 1);
  CHECK(a.rightmost_var() == 2);
  CHECK_THROWS_AS(Term::leaf(0), std::invalid_argument);
  CHECK(T("x1").is_leaf());
  CHECK(a.left() == Term::leaf(1));
}

TEST_CASE("classification predicates") {
  CHECK(T("(x1 x2) x3").is_bracketing());
  CHECK_FALSE(T("(x2 x1) x3").is_bracketing());
  CHECK(T("(x2 x1) x3").is_full_linear());
  CHECK_FALSE(T("(x2 x4) x3").is_full_linear());
  CHECK(T("(x2 x4) x3").is_linear());
  CHECK_FALSE(T("(x1 x1) x3").is_linear());
}

TEST_CASE("bracketing enumeration") {
  std::vector<Term> one = enumerate_bracketings(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Term::leaf(1));

  std::vector<Term> b4 = enumerate_bracketings(4);
  REQUIRE(b4.size() == 5);
  // the five shapes on four leaves
  std::vector<Term> shown = {T("((x1 x2) x3) x4"), T("(x1 x2) (x3 x4)"), T("(x1 (x2 x3)) x4"),
                             T("x1 ((x2 x3) x4)"), T("x1 (x2 (x3 x4))")};
  for (const Term& s : shown) CHECK(std::count(b4.begin(), b4.end(), s) == 1);
  // documented order: split sizes ascending, recursing on each side
  std::vector<std::string> golden = {"x1 (x2 (x3 x4))", "x1 ((x2 x3) x4)", "(x1 x2) (x3 x4)",
                                     "(x1 (x2 x3)) x4", "((x1 x2) x3) x4"};
  for (size_t i = 0; i < golden.size(); ++i) CHECK(format_term(b4[i]) == golden[i]);

  for (int n = 1; n <= 12; ++n) {
    uint64_t count = 0;
    for_each_bracketing(n, [&](const Term& t) {
      ++count;
      (void)t;
    });
    CHECK(count == brute_count(n));
    CHECK(BigInt(count) == catalan(n - 1));
  }

  CHECK_THROWS_AS(for_each_bracketing(0, [](const Term&) {}), SizeLimitError);
  CHECK_THROWS_AS(for_each_bracketing(17, [](const Term&) {}), SizeLimitError);
}

TEST_CASE("full linear term enumeration") {
  std::vector<Term> two;
  for_each_full_linear_term(2, [&](const Term& t) { two.push_back(t); });
  REQUIRE(two.size() == 2);
  CHECK(two[0] == T("x1 x2"));
  CHECK(two[1] == T("x2 x1"));

  for (int n : {3, 5}) {
    std::set<std::string> seen;
    uint64_t count = 0;
    for_each_full_linear_term(n, [&](const Term& t) {
      ++count;
      CHECK(t.is_full_linear());
      seen.insert(format_term(t));
    });
    uint64_t expected = n == 3 ? 12 : 1680;  // n! * C(n-1)
    CHECK(count == expected);
    CHECK(seen.size() == expected);  // each exactly once
  }
  CHECK_THROWS_AS(for_each_full_linear_term(11, [](const Term&) {}), SizeLimitError);
}

TEST_CASE("depth vectors") {
  Term comb_l = T("((x1 x2) x3) x4");
  DepthVector full = depth_vector(comb_l, DepthKind::full);
  CHECK(full.values == std::map<int, int>{{1, 3}, {2, 3}, {3, 2}, {4, 1}});
  DepthVector right = depth_vector(comb_l, DepthKind::right);
  CHECK(right.values == std::map<int, int>{{1, 0}, {2, 1}, {3, 1}, {4, 1}});

  Term comb_r = T("x1 (x2 (x3 x4))");
  CHECK(depth_vector(comb_r, DepthKind::full).values ==
        std::map<int, int>{{1, 1}, {2, 2}, {3, 3}, {4, 3}});
  CHECK(depth_vector(comb_r, DepthKind::left).values ==
        std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 0}});
  CHECK(depth_vector(comb_r, DepthKind::right).values ==
        std::map<int, int>{{1, 0}, {2, 1}, {3, 2}, {4, 3}});

  CHECK_THROWS_AS(depth_vector(T("x1 x1"), DepthKind::full), std::invalid_argument);
}

TEST_CASE("depth vector laws on all small trees") {
  for (int n = 1; n <= 8; ++n) {
    for_each_bracketing(n, [&](const Term& t) {
      DepthVector d = depth_vector(t, DepthKind::full);
      DepthVector l = depth_vector(t, DepthKind::left);
      DepthVector r = depth_vector(t, DepthKind::right);
      uint64_t kraft = 0;
      int dmax = 0;
      for (auto [i, di] : d.values) dmax = std::max(dmax, di);
      for (auto [i, di] : d.values) {
        kraft += uint64_t{1} << (dmax - di);
        CHECK(l.values[i] + r.values[i] == di);
      }
      CHECK(kraft == uint64_t{1} << dmax);  // sum of 2^(-d_i) is exactly 1
      CHECK(r.values.at(t.leftmost_var()) == 0);
      CHECK(l.values.at(t.rightmost_var()) == 0);
    });
  }
}

TEST_CASE("leftmost decomposition") {
  auto [h0, t0] = leftmost_decomposition(Term::leaf(1));
  CHECK(h0 == Term::leaf(1));
  CHECK(t0.empty());

  auto [h1, t1] = leftmost_decomposition(T("(x1 x2) x3"));
  CHECK(h1 == Term::leaf(1));
  REQUIRE(t1.size() == 2);
  CHECK(t1[0] == Term::leaf(2));
  CHECK(t1[1] == Term::leaf(3));

  auto [h2, t2] = leftmost_decomposition(T("(x2 x4) (x1 x3)"));
  CHECK(h2 == Term::leaf(2));
  REQUIRE(t2.size() == 2);
  CHECK(t2[0] == Term::leaf(4));
  CHECK(t2[1] == T("x1 x3"));

  // rebuilding by left association is the identity; tail length is the
  // leftmost leaf's left depth
  for (int n = 1; n <= 6; ++n) {
    for_each_full_linear_term(n, [&](const Term& t) {
      auto [head, tail] = leftmost_decomposition(t);
      std::vector<Term> parts{head};
      parts.insert(parts.end(), tail.begin(), tail.end());
      CHECK(leftmost_bracketing(parts) == t);
      CHECK(static_cast<int>(tail.size()) ==
            depth_vector(t, DepthKind::left).values.at(t.leftmost_var()));
    });
  }
}

TEST_CASE("leftmost and rightmost bracketings") {
  std::vector<Term> xs = {Term::leaf(1), Term::leaf(2), Term::leaf(3)};
  CHECK(leftmost_bracketing({xs.data(), 1}) == Term::leaf(1));
  CHECK(leftmost_bracketing(xs) == T("(x1 x2) x3"));
  CHECK(rightmost_bracketing(xs) == T("x1 (x2 x3)"));
  CHECK_THROWS_AS(leftmost_bracketing({}), std::invalid_argument);
  CHECK_THROWS_AS(rightmost_bracketing({}), std::invalid_argument);
}

TEST_CASE("standard variants") {
  Term t = T("x3 (x1 x2)");
  CHECK(standard_variant(t, BracketingForm::left_occurrence) == T("(x3 x1) x2"));
  CHECK(standard_variant(t, BracketingForm::right_sorted) == T("x1 (x2 x3)"));
  CHECK(standard_variant(t, BracketingForm::right_occurrence) == T("x3 (x1 x2)"));
  CHECK(standard_variant(t, BracketingForm::left_sorted) == T("(x1 x2) x3"));

  Term two = T("x1 x2");
  CHECK(standard_variant(two, BracketingForm::left_occurrence) ==
        standard_variant(two, BracketingForm::right_occurrence));
  CHECK_THROWS_AS(standard_variant(T("x1 x1"), BracketingForm::left_occurrence),
                  std::invalid_argument);
}

TEST_CASE("egg partitions") {
  CHECK(egg_partition(T("(x1 x2) x3")).blocks ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(egg_partition(T("(x1 x2) (x3 x4)")).blocks ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(egg_partition(T("x1 x2")).blocks == std::vector<std::vector<int>>{{1, 2}});
  CHECK(egg_partition(T("(x2 x1) ((x3 x4) x5)")).blocks ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
  CHECK_THROWS_AS(egg_partition(Term::leaf(1)), std::invalid_argument);

  for (int n = 2; n <= 6; ++n) {
    for_each_full_linear_term(n, [&](const Term& t) {
      EggPartition ep = egg_partition(t);
      std::set<int> covered;
      int pairs = 0;
      for (const auto& b : ep.blocks) {
        CHECK(b.size() <= 2);
        pairs += b.size() == 2;
        for (int v : b) covered.insert(v);
      }
      CHECK(static_cast<int>(covered.size()) == n);
      CHECK(pairs >= 1);
    });
  }
}

TEST_CASE("rooted partitions") {
  RootedPartition rp = rooted_partition(T("x1 (x2 x3)"));
  CHECK(rp.root == 1);
  CHECK(rp.blocks == std::vector<std::vector<int>>{{2, 3}});

  RootedOrderedPartition ro = rooted_ordered_partition(T("(x2 x4) (x1 x3)"));
  CHECK(ro.root == 2);
  CHECK(ro.blocks == std::vector<std::vector<int>>{{4}, {1, 3}});

  RootedOrderedPartition ro2 = rooted_ordered_partition(T("(x1 x2) x3"));
  CHECK(ro2.root == 1);
  CHECK(ro2.blocks == std::vector<std::vector<int>>{{2}, {3}});
}

TEST_CASE("parsing") {
  CHECK(T("(x1 x2) x3") == Term::node(Term::node(Term::leaf(1), Term::leaf(2)), Term::leaf(3)));
  Term w = T("w((xy)z)");
  CHECK(w.leaf_sequence() == std::vector<int>{2, 3, 4, 5});
  CHECK(w == Term::node(Term::leaf(2),
                        Term::node(Term::node(Term::leaf(3), Term::leaf(4)), Term::leaf(5))));
  CHECK(T("x1*x2") == T("x1 x2"));
  CHECK(T("v w") == T("x1 x2"));
  CHECK(T("x12") == Term::leaf(12));

  try {
    parse_term("((x1");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("x1 x2 x3"), ParseError);  // needs parentheses
  CHECK_THROWS_AS(parse_term("x1)"), ParseError);
  CHECK_THROWS_AS(parse_term("a"), ParseError);
  CHECK_THROWS_AS(parse_term("x0"), ParseError);
}

TEST_CASE("format round trip") {
  CHECK(format_term(T("((x1 x2) x3) x4")) == "((x1 x2) x3) x4");
  for (int n = 1; n <= 6; ++n)
    for_each_bracketing(n, [&](const Term& t) { CHECK(parse_term(format_term(t)) == t); });
  for (int n = 1; n <= 5; ++n)
    for_each_full_linear_term(n, [&](const Term& t) { CHECK(parse_term(format_term(t)) == t); });
}
