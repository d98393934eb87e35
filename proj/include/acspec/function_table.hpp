#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "acspec/groupoid.hpp"

namespace acspec {

/// The n-ary operation induced by a term, stored as a packed value vector over
/// all k^n argument tuples. Entry index is sum a_i * k^(n-i) with a_1 most
/// significant. Equality and hashing are over the packed words, so the packed
/// form is the canonical one.
class FunctionTable {
 public:
  FunctionTable(int arity, int base, std::span<const uint8_t> values);

  /// The 1-ary identity x -> x.
  static FunctionTable identity(int base);

  int arity() const { return arity_; }
  int base() const { return base_; }
  uint64_t entry_count() const { return entries_; }
  int bits_per_entry() const { return bits_; }
  /// Packed footprint in bytes.
  size_t byte_size() const { return words_.size() * sizeof(uint64_t); }

  uint8_t get(uint64_t index) const {
    int per = 64 / bits_;
    return static_cast<uint8_t>((words_[index / per] >> ((index % per) * bits_)) & mask_);
  }

  std::vector<uint8_t> unpacked() const;

  bool operator==(const FunctionTable& other) const {
    return arity_ == other.arity_ && base_ == other.base_ && words_ == other.words_;
  }
  size_t hash() const;

  static uint64_t pow_u64(uint64_t base, int exp);

 private:
  friend class TableBuilder;
  FunctionTable(int arity, int base, uint64_t entries);
  int arity_;
  int base_;
  int bits_;
  uint64_t mask_;
  uint64_t entries_;
  std::vector<uint64_t> words_;
};

struct FunctionTableHash {
  size_t operator()(const FunctionTable& t) const { return t.hash(); }
};

/// Sequential packed writer; entries must be appended in index order.
class TableBuilder {
 public:
  TableBuilder(int arity, int base);
  void append(uint8_t value) {
    acc_ |= static_cast<uint64_t>(value) << shift_;
    shift_ += table_.bits_;
    if (shift_ > 64 - table_.bits_) {
      table_.words_.push_back(acc_);
      acc_ = 0;
      shift_ = 0;
    }
  }
  FunctionTable finish();

 private:
  FunctionTable table_;
  uint64_t acc_ = 0;
  int shift_ = 0;
};

inline constexpr uint64_t kDefaultTableEntryCap = 10'000'000;

/// Table of the n-ary operation induced by a full linear term: entry at every
/// assignment equals evaluate(g, t, a).
FunctionTable induced_table(const Groupoid& g, const Term& t,
                            uint64_t entry_cap = kDefaultTableEntryCap);

/// The table of (a_1..a_{p+q}) -> f(a restricted to left_positions) * h(a on
/// the complement). Positions are 1-based, strictly increasing, of size
/// f.arity(), within 1..p+q.
FunctionTable compose_split(const FunctionTable& f, const FunctionTable& h,
                            std::span<const int> left_positions, const Groupoid& g);

namespace detail {

/// Precomputed argument routing for one split, reusable across table pairs.
struct SplitIndex {
  std::vector<uint32_t> fidx, hidx;  // per global entry index
};

SplitIndex make_split_index(int arity, int base, std::span<const int> left_positions);

FunctionTable compose_with_index(const FunctionTable& f, const FunctionTable& h,
                                 const SplitIndex& idx, const Groupoid& g);

/// Fast path for left_positions = {1..p}: result[a * k^q + b] = f(a) * h(b).
FunctionTable compose_prefix(const FunctionTable& f, const FunctionTable& h, const Groupoid& g);

}  // namespace detail

}  // namespace acspec
