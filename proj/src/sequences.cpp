#include "acspec/sequences.hpp"

#include <map>
#include <mutex>

namespace acspec {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // divides exactly: r is binom(n-k+i, i) after this step
  }
  return r;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt schroeder3(unsigned n) {
  BigInt r = factorial(2 * n);
  r /= BigInt(1) << n;
  r /= factorial(n);
  return r;
}

BigInt modular_catalan(unsigned k, unsigned n) {
  if (k == 0) throw std::invalid_argument("modular_catalan: k must be >= 1");
  if (n == 0) return 1;
  BigInt sum = 0;
  for (unsigned j = 0; j * k <= n - 1; ++j) {
    BigInt term = binomial(n, j) * binomial(2 * n - j * k, n + 1);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  // the 1/n factor of the formula; the alternating sum is always divisible
  BigInt q = sum / n;
  if (q * n != sum) throw std::logic_error("modular_catalan: non-integral sum");
  return q;
}

BigInt fibonacci(unsigned n) {
  BigInt a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

BigInt stirling2(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || k > n) return 0;
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;  // row for n=0
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min<unsigned>(k, i); j >= 1; --j)
      row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt bell(unsigned n) {
  BigInt sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

BigInt restricted_bell(unsigned n, unsigned m) {
  if (m == 0) throw std::invalid_argument("restricted_bell: m must be >= 1");
  // recurse on the block containing element n (size j+1 <= m)
  std::vector<BigInt> memo(n + 1);
  memo[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    BigInt sum = 0;
    for (unsigned j = 0; j <= std::min(i - 1, m - 1); ++j)
      sum += binomial(i - 1, j) * memo[i - 1 - j];
    memo[i] = sum;
  }
  return memo[n];
}

BigInt ordered_bell(unsigned n) {
  BigInt sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += factorial(k) * stirling2(n, k);
  return sum;
}

namespace {

BigInt pow2(int e) { return e < 0 ? BigInt(0) : BigInt(1) << e; }

unsigned require_k(const std::string& label, std::optional<unsigned> k) {
  if (!k || *k == 0)
    throw std::invalid_argument("bound formula '" + label + "' needs a parameter k >= 1");
  return *k;
}

unsigned u(int n) { return static_cast<unsigned>(n); }

struct FormulaDef {
  int domain_start;
  bool needs_k;
  std::function<BigInt(int, unsigned)> eval;
};

const std::map<std::string, FormulaDef>& formula_defs() {
  static const std::map<std::string, FormulaDef> defs = {
      {"1", {1, false, [](int, unsigned) { return BigInt(1); }}},
      {"2", {1, false, [](int, unsigned) { return BigInt(2); }}},
      {"3", {1, false, [](int, unsigned) { return BigInt(3); }}},
      {"4", {1, false, [](int, unsigned) { return BigInt(4); }}},
      {"n", {1, false, [](int n, unsigned) { return BigInt(n); }}},
      {"n+1", {1, false, [](int n, unsigned) { return BigInt(n) + 1; }}},
      {"n-1", {2, false, [](int n, unsigned) { return BigInt(n) - 1; }}},
      {"2n", {1, false, [](int n, unsigned) { return BigInt(2) * n; }}},
      {"3n", {1, false, [](int n, unsigned) { return BigInt(3) * n; }}},
      {"n^2", {1, false, [](int n, unsigned) { return BigInt(n) * n; }}},
      {"2n^2", {1, false, [](int n, unsigned) { return BigInt(2) * n * n; }}},
      {"n!", {1, false, [](int n, unsigned) { return factorial(u(n)); }}},
      {"2^{n-2}", {2, false, [](int n, unsigned) { return pow2(n - 2); }}},
      {"2^{n-1}-1", {2, false, [](int n, unsigned) { return pow2(n - 1) - 1; }}},
      {"2^n-2", {2, false, [](int n, unsigned) { return pow2(n) - 2; }}},
      {"n(2^{n-1}-1)", {2, false, [](int n, unsigned) { return BigInt(n) * (pow2(n - 1) - 1); }}},
      {"n!+sum k!C(n,k)",
       {1, false,
        [](int n, unsigned) {
          BigInt sum = factorial(u(n));
          for (int j = 0; j <= n - 3; ++j) sum += factorial(u(j)) * binomial(u(n), u(j));
          return sum;
        }}},
      {"F_{n+1}-1", {2, false, [](int n, unsigned) { return fibonacci(u(n) + 1) - 1; }}},
      {"B_{n,2}-1", {2, false, [](int n, unsigned) { return restricted_bell(u(n), 2) - 1; }}},
      {"nB_{n-1}", {1, false, [](int n, unsigned) { return BigInt(n) * bell(u(n) - 1); }}},
      {"nB'_{n-1}", {1, false, [](int n, unsigned) { return BigInt(n) * ordered_bell(u(n) - 1); }}},
      {"C_{n-1}", {1, false, [](int n, unsigned) { return catalan(u(n) - 1); }}},
      {"D_{n-1}", {1, false, [](int n, unsigned) { return schroeder3(u(n) - 1); }}},
      {"C_{k,n-1}", {1, true, [](int n, unsigned k) { return modular_catalan(k, u(n) - 1); }}},
      {"k!S(n,k)+n sum i!S(n-1,i)",
       {1, true,
        [](int n, unsigned k) {
          BigInt sum = factorial(k) * stirling2(u(n), k);
          BigInt inner = 0;
          for (unsigned i = 0; i + 2 <= k; ++i) inner += factorial(i) * stirling2(u(n) - 1, i);
          return sum + BigInt(n) * inner;
        }}},
      {"floor(2^n/3)", {2, false, [](int n, unsigned) { return pow2(n) / 3; }}},
      {"(2^n-(-1)^n)/3",
       {1, false, [](int n, unsigned) { return (pow2(n) - (n % 2 == 0 ? 1 : -1)) / 3; }}},
      {"k", {1, true, [](int, unsigned k) { return BigInt(k); }}},
      {"kn", {1, true, [](int n, unsigned k) { return BigInt(k) * n; }}},
  };
  return defs;
}

const std::map<std::string, std::string>& formula_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"A185109", "n!+sum k!C(n,k)"}, {"A058877", "n(2^{n-1}-1)"},
      {"A052889", "nB_{n-1}"},        {"A052882", "nB'_{n-1}"},
      {"A000975", "floor(2^n/3)"},    {"A001045", "(2^n-(-1)^n)/3"},
      {"A000108", "C_{n-1}"},         {"A001147", "D_{n-1}"},
  };
  return aliases;
}

}  // namespace

SequenceOracle bound_formula(const std::string& label, std::optional<unsigned> k) {
  std::string key = label;
  if (auto a = formula_aliases().find(key); a != formula_aliases().end()) key = a->second;
  auto it = formula_defs().find(key);
  if (it == formula_defs().end())
    throw std::invalid_argument("unknown bound formula '" + label + "'");
  const FormulaDef& def = it->second;
  unsigned kk = def.needs_k ? require_k(label, k) : 0;
  std::string name = key;
  if (def.needs_k) name += " [k=" + std::to_string(kk) + "]";
  auto eval = def.eval;
  return SequenceOracle(name, def.domain_start, [eval, kk](int n) { return eval(n, kk); });
}

std::vector<std::string> bound_formula_labels() {
  std::vector<std::string> out;
  for (const auto& [name, def] : formula_defs()) out.push_back(name);
  return out;
}

PiecewiseOracle::PiecewiseOracle(std::vector<std::pair<int, SequenceOracle>> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("piecewise oracle needs at least one piece");
  for (size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i].first <= pieces_[i - 1].first)
      throw std::invalid_argument("piecewise oracle pieces must have increasing starts");
}

int PiecewiseOracle::domain_start() const { return pieces_.front().first; }

const SequenceOracle& PiecewiseOracle::piece_at(int n) const {
  if (n < domain_start())
    throw std::domain_error("piecewise oracle undefined below n=" +
                            std::to_string(domain_start()));
  size_t i = pieces_.size() - 1;
  while (pieces_[i].first > n) --i;
  return pieces_[i].second;
}

BigInt PiecewiseOracle::operator()(int n) const { return piece_at(n)(n); }

const std::string& PiecewiseOracle::name_at(int n) const { return piece_at(n).name(); }

}  // namespace acspec
