#include <doctest.h>

#include <fstream>
#include <sstream>

#include "acspec/groupoid.hpp"

using namespace acspec;

namespace {

Term T(const char* s) { return parse_term(s); }

const std::vector<std::pair<std::string, std::string>>& anti_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"SC271", "SC1610"}, {"SC356", "SC2032"}, {"SC10", "SC367"},   {"SC405", "SC405"},
      {"SC3242", "SC3302"}, {"SC79", "SC79"},   {"SC4", "SC7"},      {"SC5", "SC28"},
      {"SC170", "SC189"},  {"SC2467", "SC3162"}, {"SC2155", "SC2302"}, {"SC41", "SC398"},
      {"SC96", "SC1069"},  {"SC262", "SC1441"}, {"SC1812", "SC1793"}, {"SC2446", "SC2430"},
      {"SC64", "SC399"},   {"SC258", "SC1594"}, {"SC685", "SC1600"}, {"SC1414", "SC1717"},
      {"SC1477", "SC1693"}, {"SC229", "SC1553"}, {"SC275", "SC2029"},
  };
  return pairs;
}

}  // namespace

TEST_CASE("groupoid construction") {
  CHECK_THROWS_AS(Groupoid(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Groupoid(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Groupoid(2, {0, 1, 1, 2}), std::invalid_argument);
  Groupoid g(2, {0, 0, 1, 1}, "P");
  CHECK(g.apply(1, 0) == 1);
  CHECK_FALSE(g.is_commutative());
  CHECK(g.opposite().apply(0, 1) == 1);
}

TEST_CASE("evaluation") {
  const Groupoid& sub = registry("SC2302");
  Assignment a({0, 1, 2});
  CHECK(evaluate(sub, T("(x1 x2) x3"), a) == 0);  // 0*1=2, then 2*2=0

  const Groupoid& proj = registry("SC275");
  for (const char* s : {"(x1 x2) x3", "x1 (x2 x3)", "(x2 x3) x1", "x3 (x2 x1)"}) {
    Term t = T(s);
    Assignment b({2, 0, 1});
    uint8_t leftmost = static_cast<uint8_t>(*b.get(t.leftmost_var()));
    CHECK(evaluate(proj, t, b) == leftmost);
  }

  Assignment c;
  c.set(1, 2);
  CHECK(evaluate(registry("SC405"), Term::leaf(1), c) == 2);
  CHECK_THROWS_AS(evaluate(sub, T("x1 x2"), c), std::invalid_argument);  // x2 unassigned
  Assignment d;
  d.set(1, 7);
  CHECK_THROWS_AS(evaluate(sub, Term::leaf(1), d), std::invalid_argument);  // out of range
}

TEST_CASE("identity satisfaction") {
  CHECK(satisfies_identity(registry("SC275"), catalog_identity("1")));
  CHECK(satisfies_identity(registry("SC1066"), catalog_identity("2")));
  CHECK(satisfies_identity(registry("SC1066"), catalog_identity("7")));
  CHECK_FALSE(satisfies_identity(registry("SC2302"), catalog_identity("2")));

  // commutativity is exactly a symmetric table
  for (const std::string& name : registry_names()) {
    const Groupoid& g = registry(name);
    CHECK(satisfies_identity(g, catalog_identity("2")) == g.is_commutative());
  }

  // symmetric in the two sides and invariant under variable renaming
  Identity id3 = catalog_identity("3");
  Identity flipped{id3.rhs, id3.lhs, "3'"};
  Identity renamed{T("(x7 x9) x8"), T("(x7 x8) x9"), "3''"};
  for (const char* n : {"SC41", "SC79", "SC2302", "SC1066"}) {
    bool base = satisfies_identity(registry(n), id3);
    CHECK(satisfies_identity(registry(n), flipped) == base);
    CHECK(satisfies_identity(registry(n), renamed) == base);
  }

  // one-sided variable sets quantify over the union
  Identity absorb{T("x1 x2"), T("x1"), "xy=x"};
  CHECK(satisfies_identity(registry("SC275"), absorb));
  CHECK_FALSE(satisfies_identity(registry("SC2029"), absorb));

  Groupoid big(4, std::vector<uint8_t>(16, 0));
  CHECK_THROWS_AS(satisfies_identity(big, catalog_identity("16"), 100), SizeLimitError);
}

TEST_CASE("identity catalog content") {
  const auto& cat = identity_catalog();
  REQUIRE(cat.size() == 18);
  for (size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].label == std::to_string(i + 1));
  CHECK(catalog_identity("1").lhs == T("x3 x4"));
  CHECK(catalog_identity("1").rhs == T("x3"));
  CHECK(catalog_identity("7").lhs == T("x2 (x3 (x4 x5))"));
  CHECK(catalog_identity("7").rhs == T("x2 ((x3 x4) x5)"));
  CHECK(catalog_identity("16").lhs == T("(((x1 x2) x3) x4) x5"));
  CHECK(catalog_identity("16").rhs == T("x1 (x2 (x3 (x4 x5)))"));
  CHECK(catalog_identity("18").lhs == T("(x1 x2) (x3 (x4 x5))"));
  CHECK(catalog_identity("18").rhs == T("(((x1 x2) x3) x4) x5"));
  CHECK_THROWS_AS(catalog_identity("19"), std::invalid_argument);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(registry("SC271"), registry("SC1610"), true).has_value());
  CHECK(find_isomorphism(registry("SC1066"), registry("SC1066"), true).has_value());
  CHECK_FALSE(find_isomorphism(registry("SC275"), registry("SC2029"), false).has_value());
  CHECK(find_isomorphism(registry("SC275"), registry("SC2029"), true).has_value());
  CHECK_THROWS_AS(find_isomorphism(registry("P"), registry("SC405"), false),
                  std::invalid_argument);

  // a found witness really is one
  auto w = find_isomorphism(registry("SC356"), registry("SC2032"), true);
  REQUIRE(w.has_value());
  const Groupoid &g = registry("SC356"), &h = registry("SC2032");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK((*w)[g.apply(a, b)] == h.apply((*w)[b], (*w)[a]));
}

TEST_CASE("anti-isomorphic pairs in the registry") {
  for (const auto& [a, b] : anti_pairs()) {
    INFO(a, " ~op ", b);
    CHECK(find_isomorphism(registry(a), registry(b), true).has_value());
  }
}

TEST_CASE("registry") {
  CHECK(registry("SC405").table() == std::vector<uint8_t>{0, 0, 1, 0, 0, 1, 1, 1, 0});
  CHECK(registry("SC2346").table() == std::vector<uint8_t>{0, 2, 1, 2, 1, 0, 1, 0, 2});
  CHECK(registry("SC79").table() == std::vector<uint8_t>{0, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(registry("P").size() == 2);
  CHECK(registry_names().size() == 52);
  CHECK_THROWS_AS(registry("SC9999"), std::invalid_argument);
}

TEST_CASE("registry matches the committed fixture") {
  std::ifstream in(std::string(ACSPEC_FIXTURE_DIR) + "/registry_tables.txt");
  REQUIRE(in.good());
  std::stringstream expected;
  expected << in.rdbuf();

  std::stringstream actual;
  for (const std::string& name : registry_names()) {
    const Groupoid& g = registry(name);
    actual << name << ' ' << g.size();
    for (int a = 0; a < g.size(); ++a) {
      actual << ' ';
      for (int b = 0; b < g.size(); ++b) actual << static_cast<int>(g.apply(a, b));
    }
    actual << '\n';
  }
  CHECK(actual.str() == expected.str());
}

TEST_CASE("cayley parsing") {
  Groupoid g = parse_cayley_text("0 1 / 1 0");
  CHECK(g.size() == 2);
  CHECK(g.apply(0, 1) == 1);
  CHECK(parse_cayley_text("0 0 1\n0 0 1\n1 1 0").table() == registry("SC405").table());
  CHECK_THROWS_AS(parse_cayley_text("0 1 / 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_text("0 1 / 1 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_text("0 x / 1 0"), std::invalid_argument);

  Groupoid j = parse_cayley_json(R"({"size":3,"table":[[0,0,1],[0,0,1],[1,1,0]],"name":"t"})");
  CHECK(j.table() == registry("SC405").table());
  CHECK(j.name() == "t");
  CHECK_THROWS_AS(parse_cayley_json(R"({"size":2,"table":[[0,1],[1,2]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_json(R"({"size":2,"table":[[0,1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cayley_json(R"({"table":[[0]]})"), std::invalid_argument);
}
