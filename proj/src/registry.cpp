#include <array>
#include <map>

#include "acspec/groupoid.hpp"

namespace acspec {

namespace {

struct Entry {
  const char* name;
  int size;
  std::array<uint8_t, 9> cells;  // row-major; first size^2 used
};

// Cayley tables of the named groupoids, rows indexed by the left operand.
// Guarded against transcription slips by the fixture-file checksum test.
constexpr Entry kEntries[] = {
    {"P", 2, {0, 0, 1, 1}},
    {"N", 2, {1, 1, 0, 0}},
    {"SC4", 3, {0, 0, 0, 0, 0, 0, 0, 1, 0}},
    {"SC5", 3, {0, 0, 0, 0, 0, 0, 0, 1, 1}},
    {"SC7", 3, {0, 0, 0, 0, 0, 0, 0, 2, 0}},
    {"SC10", 3, {0, 0, 0, 0, 0, 0, 1, 0, 0}},
    {"SC28", 3, {0, 0, 0, 0, 0, 1, 0, 0, 1}},
    {"SC41", 3, {0, 0, 0, 0, 0, 1, 1, 1, 2}},
    {"SC64", 3, {0, 0, 0, 0, 0, 2, 1, 1, 0}},
    {"SC79", 3, {0, 0, 0, 0, 1, 0, 0, 0, 1}},
    {"SC96", 3, {0, 0, 0, 0, 1, 0, 2, 0, 2}},
    {"SC170", 3, {0, 0, 0, 0, 2, 1, 0, 2, 1}},
    {"SC189", 3, {0, 0, 0, 0, 2, 2, 0, 1, 1}},
    {"SC229", 3, {0, 0, 0, 1, 0, 1, 1, 1, 1}},
    {"SC258", 3, {0, 0, 0, 1, 1, 0, 1, 0, 1}},
    {"SC262", 3, {0, 0, 0, 1, 1, 0, 1, 1, 2}},
    {"SC271", 3, {0, 0, 0, 1, 1, 0, 2, 2, 2}},
    {"SC275", 3, {0, 0, 0, 1, 1, 1, 2, 2, 2}},
    {"SC356", 3, {0, 0, 0, 2, 1, 1, 1, 2, 2}},
    {"SC367", 3, {0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {"SC398", 3, {0, 0, 1, 0, 0, 1, 0, 1, 2}},
    {"SC399", 3, {0, 0, 1, 0, 0, 1, 0, 2, 0}},
    {"SC405", 3, {0, 0, 1, 0, 0, 1, 1, 1, 0}},
    {"SC685", 3, {0, 0, 1, 1, 1, 0, 1, 0, 0}},
    {"SC1066", 3, {0, 0, 2, 0, 0, 2, 2, 2, 1}},
    {"SC1069", 3, {0, 0, 2, 0, 1, 0, 0, 0, 2}},
    {"SC1108", 3, {0, 0, 2, 0, 1, 1, 2, 1, 2}},
    {"SC1414", 3, {0, 0, 2, 2, 0, 2, 2, 2, 0}},
    {"SC1441", 3, {0, 0, 2, 2, 1, 2, 0, 0, 2}},
    {"SC1477", 3, {0, 0, 2, 2, 2, 0, 2, 0, 0}},
    {"SC1553", 3, {0, 1, 1, 0, 0, 1, 0, 1, 1}},
    {"SC1594", 3, {0, 1, 1, 0, 1, 0, 0, 0, 1}},
    {"SC1600", 3, {0, 1, 1, 0, 1, 0, 1, 0, 0}},
    {"SC1610", 3, {0, 1, 1, 0, 1, 2, 0, 1, 2}},
    {"SC1693", 3, {0, 1, 1, 1, 0, 0, 0, 0, 1}},
    {"SC1701", 3, {0, 1, 1, 1, 0, 0, 1, 0, 1}},
    {"SC1717", 3, {0, 1, 1, 1, 0, 1, 0, 1, 0}},
    {"SC1793", 3, {0, 1, 1, 1, 2, 1, 1, 2, 1}},
    {"SC1812", 3, {0, 1, 1, 1, 2, 2, 1, 1, 1}},
    {"SC2029", 3, {0, 1, 2, 0, 1, 2, 0, 1, 2}},
    {"SC2032", 3, {0, 1, 2, 0, 1, 2, 1, 0, 2}},
    {"SC2155", 3, {0, 1, 2, 2, 0, 1, 1, 2, 0}},
    {"SC2302", 3, {0, 2, 1, 1, 0, 2, 2, 1, 0}},
    {"SC2346", 3, {0, 2, 1, 2, 1, 0, 1, 0, 2}},
    {"SC2407", 3, {1, 0, 0, 0, 2, 0, 0, 0, 0}},
    {"SC2430", 3, {1, 0, 0, 0, 2, 1, 0, 2, 1}},
    {"SC2446", 3, {1, 0, 0, 0, 2, 2, 0, 1, 1}},
    {"SC2467", 3, {1, 0, 0, 1, 0, 0, 1, 0, 1}},
    {"SC3093", 3, {1, 1, 0, 1, 2, 0, 0, 0, 1}},
    {"SC3162", 3, {1, 1, 1, 0, 0, 0, 0, 0, 1}},
    {"SC3242", 3, {1, 1, 1, 2, 2, 2, 0, 0, 0}},
    {"SC3302", 3, {1, 2, 0, 1, 2, 0, 1, 2, 0}},
};

const std::map<std::string, Groupoid, std::less<>>& registry_map() {
  static const std::map<std::string, Groupoid, std::less<>> m = [] {
    std::map<std::string, Groupoid, std::less<>> out;
    for (const Entry& e : kEntries) {
      std::vector<uint8_t> table(e.cells.begin(), e.cells.begin() + e.size * e.size);
      out.emplace(e.name, Groupoid(e.size, std::move(table), e.name));
    }
    return out;
  }();
  return m;
}

}  // namespace

const Groupoid& registry(std::string_view name) {
  const auto& m = registry_map();
  auto it = m.find(name);
  if (it == m.end())
    throw std::invalid_argument("unknown registry groupoid '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.push_back(e.name);
    return out;
  }();
  return names;
}

}  // namespace acspec
