#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acspec/term.hpp"

namespace acspec {

/// A finite set {0..k-1} with one binary operation, given by its Cayley table.
class Groupoid {
 public:
  Groupoid(int size, std::vector<uint8_t> table, std::string name = "");

  int size() const { return size_; }
  const std::string& name() const { return name_; }
  const std::vector<uint8_t>& table() const { return table_; }

  uint8_t apply(uint8_t a, uint8_t b) const { return table_[a * size_ + b]; }

  bool is_commutative() const;
  Groupoid opposite() const;

 private:
  int size_;
  std::vector<uint8_t> table_;  // row-major, table_[a*size_+b] = a*b
  std::string name_;
};

/// Partial map from variable labels to elements.
class Assignment {
 public:
  Assignment() = default;
  /// values[i] is assigned to label i+1.
  explicit Assignment(const std::vector<uint8_t>& values);

  void set(int var, uint8_t value);
  std::optional<uint8_t> get(int var) const;

 private:
  std::vector<int16_t> values_;  // index = label, -1 = unset
};

/// Recursive evaluation of t under a; throws std::invalid_argument if a
/// misses a variable of t or assigns a value >= g.size().
uint8_t evaluate(const Groupoid& g, const Term& t, const Assignment& a);

struct Identity {
  Term lhs, rhs;
  std::string label;
};

inline constexpr uint64_t kDefaultAssignmentCap = 10'000'000;

/// True iff lhs and rhs evaluate equally under every assignment to the union
/// of their variable sets. Throws SizeLimitError if k^v exceeds the cap.
bool satisfies_identity(const Groupoid& g, const Identity& id,
                        uint64_t assignment_cap = kDefaultAssignmentCap);

/// The eighteen catalog identities, labeled "1".."18".
const std::vector<Identity>& identity_catalog();
const Identity& catalog_identity(const std::string& label);

/// First bijection f (in lexicographic order) with f(a*b) = f(a) (x) f(b), or
/// with the arguments swapped on the right when anti is set. Brute force;
/// sizes must match and be <= 8.
std::optional<std::vector<uint8_t>> find_isomorphism(const Groupoid& g, const Groupoid& h,
                                                     bool anti);

/// The built-in collection of named Cayley tables. Throws on unknown names.
const Groupoid& registry(std::string_view name);
const std::vector<std::string>& registry_names();

/// "0 1 / 1 0" style: k rows of k integers, rows split by newlines or '/'.
Groupoid parse_cayley_text(std::string_view text);

/// {"size": k, "table": [[...]...], "name": optional} from a JSON document.
Groupoid parse_cayley_json(const std::string& json_text);

/// Reads a file in either of the two formats (sniffs a leading '{').
Groupoid load_cayley_file(const std::string& path);

}  // namespace acspec
