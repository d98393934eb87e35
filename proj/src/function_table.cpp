#include "acspec/function_table.hpp"

#include <bit>
#include <stdexcept>

namespace acspec {

namespace {

int bits_for_base(int base) {
  if (base < 1 || base > 255) throw std::invalid_argument("table base out of range");
  return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(base - 1))));
}

}  // namespace

uint64_t FunctionTable::pow_u64(uint64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("table size overflow");
    r *= base;
  }
  return r;
}

FunctionTable::FunctionTable(int arity, int base, uint64_t entries)
    : arity_(arity),
      base_(base),
      bits_(bits_for_base(base)),
      mask_((uint64_t{1} << bits_) - 1),
      entries_(entries) {
  if (arity < 1) throw std::invalid_argument("table arity must be >= 1");
  int per = 64 / bits_;
  words_.reserve((entries + per - 1) / per);
}

FunctionTable::FunctionTable(int arity, int base, std::span<const uint8_t> values)
    : FunctionTable(arity, base, pow_u64(base, arity)) {
  if (values.size() != entries_)
    throw std::invalid_argument("table needs base^arity entries");
  TableBuilder b(arity, base);
  for (uint8_t v : values) {
    if (v >= base) throw std::invalid_argument("table entry out of range");
    b.append(v);
  }
  *this = b.finish();
}

FunctionTable FunctionTable::identity(int base) {
  std::vector<uint8_t> v(base);
  for (int i = 0; i < base; ++i) v[i] = static_cast<uint8_t>(i);
  return FunctionTable(1, base, v);
}

std::vector<uint8_t> FunctionTable::unpacked() const {
  std::vector<uint8_t> out(entries_);
  const int per = 64 / bits_;
  uint64_t i = 0;
  for (uint64_t w = 0; w < words_.size() && i < entries_; ++w) {
    uint64_t word = words_[w];
    for (int j = 0; j < per && i < entries_; ++j, ++i) {
      out[i] = static_cast<uint8_t>(word & mask_);
      word >>= bits_;
    }
  }
  return out;
}

size_t FunctionTable::hash() const {
  // FNV-1a over the packed words plus the shape
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= v & 0xff;
      h *= 1099511628211ull;
      v >>= 8;
    }
  };
  mix(static_cast<uint64_t>(arity_) << 32 | static_cast<uint64_t>(base_));
  for (uint64_t w : words_) mix(w);
  return static_cast<size_t>(h);
}

TableBuilder::TableBuilder(int arity, int base)
    : table_(arity, base, FunctionTable::pow_u64(base, arity)) {}

FunctionTable TableBuilder::finish() {
  if (shift_ > 0) {
    table_.words_.push_back(acc_);
    acc_ = 0;
    shift_ = 0;
  }
  return std::move(table_);
}

FunctionTable induced_table(const Groupoid& g, const Term& t, uint64_t entry_cap) {
  if (!t.is_full_linear())
    throw std::invalid_argument("induced_table: term must be a full linear term");
  const int n = t.size();
  const int k = g.size();
  const uint64_t total = FunctionTable::pow_u64(k, n);
  if (total > entry_cap) throw SizeLimitError("induced table exceeds entry cap");

  std::vector<uint8_t> args(n, 0);
  Assignment a(args);
  TableBuilder b(n, k);
  for (uint64_t idx = 0;; ++idx) {
    b.append(evaluate(g, t, a));
    if (idx + 1 == total) break;
    for (int i = n; i-- > 0;) {
      if (++args[i] < k) {
        a.set(i + 1, args[i]);
        break;
      }
      args[i] = 0;
      a.set(i + 1, 0);
    }
  }
  return b.finish();
}

namespace detail {

SplitIndex make_split_index(int arity, int base, std::span<const int> left_positions) {
  const int p = static_cast<int>(left_positions.size());
  const int q = arity - p;
  for (int i = 0; i < p; ++i) {
    if (left_positions[i] < 1 || left_positions[i] > arity)
      throw std::invalid_argument("split positions out of range");
    if (i > 0 && left_positions[i] <= left_positions[i - 1])
      throw std::invalid_argument("split positions must be strictly increasing");
  }
  if (p < 1 || q < 1) throw std::invalid_argument("split needs both sides nonempty");

  // weight of each global argument position in the f / h entry index
  std::vector<uint64_t> wf(arity, 0), wh(arity, 0);
  std::vector<bool> in_left(arity + 1, false);
  for (int pos : left_positions) in_left[pos] = true;
  int fr = 0, hr = 0;
  for (int pos = 1; pos <= arity; ++pos) {
    if (in_left[pos])
      wf[pos - 1] = FunctionTable::pow_u64(base, p - 1 - fr++);
    else
      wh[pos - 1] = FunctionTable::pow_u64(base, q - 1 - hr++);
  }

  const uint64_t total = FunctionTable::pow_u64(base, arity);
  SplitIndex idx;
  idx.fidx.resize(total);
  idx.hidx.resize(total);
  std::vector<uint8_t> digits(arity, 0);
  uint64_t fi = 0, hi = 0;
  for (uint64_t a = 0;; ++a) {
    idx.fidx[a] = static_cast<uint32_t>(fi);
    idx.hidx[a] = static_cast<uint32_t>(hi);
    if (a + 1 == total) break;
    for (int i = arity; i-- > 0;) {
      if (++digits[i] < base) {
        fi += wf[i];
        hi += wh[i];
        break;
      }
      fi -= static_cast<uint64_t>(base - 1) * wf[i];
      hi -= static_cast<uint64_t>(base - 1) * wh[i];
      digits[i] = 0;
    }
  }
  return idx;
}

FunctionTable compose_with_index(const FunctionTable& f, const FunctionTable& h,
                                 const SplitIndex& idx, const Groupoid& g) {
  const std::vector<uint8_t> fv = f.unpacked();
  const std::vector<uint8_t> hv = h.unpacked();
  const uint8_t* cay = g.table().data();
  const int k = g.size();
  TableBuilder b(f.arity() + h.arity(), k);
  const uint64_t total = idx.fidx.size();
  for (uint64_t a = 0; a < total; ++a) b.append(cay[fv[idx.fidx[a]] * k + hv[idx.hidx[a]]]);
  return b.finish();
}

FunctionTable compose_prefix(const FunctionTable& f, const FunctionTable& h, const Groupoid& g) {
  const std::vector<uint8_t> fv = f.unpacked();
  const std::vector<uint8_t> hv = h.unpacked();
  const int k = g.size();
  const uint8_t* cay = g.table().data();
  TableBuilder b(f.arity() + h.arity(), k);
  for (uint8_t fa : fv) {
    const uint8_t* row_base = cay + static_cast<size_t>(fa) * k;
    for (uint8_t hb : hv) b.append(row_base[hb]);
  }
  return b.finish();
}

}  // namespace detail

FunctionTable compose_split(const FunctionTable& f, const FunctionTable& h,
                            std::span<const int> left_positions, const Groupoid& g) {
  if (f.base() != h.base() || f.base() != g.size())
    throw std::invalid_argument("compose_split: base mismatch");
  if (static_cast<int>(left_positions.size()) != f.arity())
    throw std::invalid_argument("compose_split: position count must equal left arity");
  const int arity = f.arity() + h.arity();
  bool prefix = true;
  for (int i = 0; i < f.arity(); ++i)
    if (left_positions[i] != i + 1) {
      prefix = false;
      break;
    }
  if (prefix) return detail::compose_prefix(f, h, g);
  return detail::compose_with_index(f, h, detail::make_split_index(arity, g.size(), left_positions),
                                    g);
}

}  // namespace acspec
