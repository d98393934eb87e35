#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acspec/function_table.hpp"
#include "acspec/groupoid.hpp"

namespace acspec {

enum class SpectrumKind { associative, ac };
enum class Engine { dp, naive };

struct SpectrumOptions {
  int threads = 1;
  uint64_t max_functions = 2'000'000;        // distinct tables per level
  uint64_t max_table_entries = 10'000'000;   // k^n per table
  int dp_max_n_assoc = 10;
  int dp_max_n_ac = 7;
  int naive_max_n = 6;
};

struct SpectrumReport {
  std::string groupoid;
  SpectrumKind kind = SpectrumKind::associative;
  Engine engine = Engine::dp;
  int requested_n = 0;
  std::vector<uint64_t> values;         // values[i] = s_{i+1}; may stop early when truncated
  std::vector<double> wall_ms;          // per level
  std::vector<uint64_t> distinct_bytes; // packed footprint of the level's distinct tables
  bool truncated = false;
};

/// Number of distinct n-ary operations induced by bracketings, n = 1..n_max.
/// The dp engine deduplicates composed tables level by level; the naive engine
/// streams terms and deduplicates their induced tables directly.
SpectrumReport associative_spectrum(const Groupoid& g, int n_max, Engine engine,
                                    const SpectrumOptions& opts = {});

/// Same over full linear terms.
SpectrumReport ac_spectrum(const Groupoid& g, int n_max, Engine engine,
                           const SpectrumOptions& opts = {});

enum class DepthClassKind { full, left, right, leftmost_left };
enum class TermScope { bracketings, full_linear };

struct DepthClassQuery {
  int n = 1;
  int modulus = 1;
  DepthClassKind kind = DepthClassKind::full;
  TermScope scope = TermScope::bracketings;
};

/// Number of classes of terms in scope under componentwise congruence of the
/// chosen depth vector mod the modulus; kind leftmost_left keys on the
/// leftmost variable together with its left depth mod the modulus.
/// Full-linear scope is capped at n = 7.
uint64_t count_depth_classes(const DepthClassQuery& q);

}  // namespace acspec
