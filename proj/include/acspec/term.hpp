#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acspec {

/// Raised when an enumeration or computation request exceeds a configured size cap.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t offset_)
      : std::runtime_error(what + " (offset " + std::to_string(offset_) + ")"), offset(offset_) {}
  size_t offset;
};

/// An immutable ordered full binary tree with positive integer leaf labels.
/// Structure is shared; copying a Term is cheap.
class Term {
 public:
  static Term leaf(int var);
  static Term node(const Term& left, const Term& right);

  bool is_leaf() const { return node_->var != 0; }
  /// Leaf label, >= 1.
  int var() const;
  Term left() const;
  Term right() const;
  /// Number of leaves.
  int size() const { return node_->size; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  /// Leaf labels in left-to-right order.
  std::vector<int> leaf_sequence() const;
  /// Sorted distinct leaf labels.
  std::vector<int> var_set() const;
  int leftmost_var() const;
  int rightmost_var() const;

  /// All leaf labels distinct.
  bool is_linear() const;
  /// Leaf labels are exactly 1..n in left-to-right order.
  bool is_bracketing() const;
  /// Leaf labels are a permutation of 1..n.
  bool is_full_linear() const;

 private:
  struct Node {
    int var;  // 0 for internal nodes
    int size;
    std::shared_ptr<const Node> left, right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static bool equal(const Node* a, const Node* b);
  std::shared_ptr<const Node> node_;
};

enum class DepthKind { full, left, right };

/// Per-leaf edge counts on the root path: all edges, left edges, or right edges.
struct DepthVector {
  DepthKind kind;
  std::map<int, int> values;  // leaf label -> depth
};

/// Throws std::invalid_argument on duplicate leaf labels.
DepthVector depth_vector(const Term& t, DepthKind kind);

/// t written as head applied to tail by repeated left association; head is the
/// leftmost leaf.
struct LeftmostDecomposition {
  Term head;
  std::vector<Term> tail;
};

LeftmostDecomposition leftmost_decomposition(const Term& t);

/// ((t1 t2) t3) ... and (t1 (t2 (t3 ...))); empty input is an error.
Term leftmost_bracketing(std::span<const Term> terms);
Term rightmost_bracketing(std::span<const Term> terms);

/// The four standard reshapes of a linear term: left/right combs over its
/// variables, in occurrence order or in increasing label order.
enum class BracketingForm { left_occurrence, left_sorted, right_occurrence, right_sorted };

Term standard_variant(const Term& t, BracketingForm which);

/// Blocks of size <= 2 covering the term's labels: each maximal nontrivial
/// nest (caterpillar subterm) contributes its innermost leaf pair, every other
/// label is a singleton. Canonical form: blocks sorted, each block sorted.
struct EggPartition {
  std::vector<std::vector<int>> blocks;
  bool operator==(const EggPartition&) const = default;
};

/// Requires a full linear term with n >= 2.
EggPartition egg_partition(const Term& t);

/// Partition of the labels into the leftmost leaf (root) and the variable sets
/// of the tail subterms of the leftmost decomposition.
struct RootedPartition {
  int root;
  std::vector<std::vector<int>> blocks;  // canonical: sorted blocks, sorted within
  bool operator==(const RootedPartition&) const = default;
};

struct RootedOrderedPartition {
  int root;
  std::vector<std::vector<int>> blocks;  // decomposition order, sorted within
  bool operator==(const RootedOrderedPartition&) const = default;
};

RootedPartition rooted_partition(const Term& t);
RootedOrderedPartition rooted_ordered_partition(const Term& t);

inline constexpr int kMaxBracketingSize = 16;
inline constexpr int kMaxFullLinearSize = 10;

/// Streams the C(n-1) bracketings of x1..xn, left split sizes ascending,
/// recursing on each side. Throws SizeLimitError outside 1..kMaxBracketingSize.
void for_each_bracketing(int n, const std::function<void(const Term&)>& fn);

/// Streams the n!*C(n-1) full linear terms: bracketing-major, leaf-label
/// permutations in lexicographic order within each bracketing.
void for_each_full_linear_term(int n, const std::function<void(const Term&)>& fn);

/// Materialized convenience for small n.
std::vector<Term> enumerate_bracketings(int n);

/// Replaces each leaf label i by perm[i-1].
Term relabel(const Term& t, std::span<const int> perm);

/// Grammar: term := variable | "(" term term ")"; variable := "x" digits or
/// one of v w x y z (labels 1..5). Whitespace and "*" between subterms are
/// ignored; the outermost parentheses may be omitted.
Term parse_term(std::string_view text);

/// Inverse of parse_term up to term equality: "((x1 x2) x3) x4" style.
std::string format_term(const Term& t);

}  // namespace acspec
