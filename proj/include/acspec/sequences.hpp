#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acspec {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// C_n = binom(2n,n)/(n+1)
BigInt catalan(unsigned n);

/// D_n = (2n)!/(2^n n!), counts of total pairings (A001147)
BigInt schroeder3(unsigned n);

/// C_{k,n}: alternating-sum formula, exact integer arithmetic throughout.
/// C_{k,0} = 1; C_{k,n} = catalan(n) whenever k >= n.
BigInt modular_catalan(unsigned k, unsigned n);

/// F_0 = 0, F_1 = 1
BigInt fibonacci(unsigned n);

BigInt bell(unsigned n);

/// Partitions of an n-set into blocks of size at most m.
BigInt restricted_bell(unsigned n, unsigned m);

/// Fubini numbers (A000670).
BigInt ordered_bell(unsigned n);

BigInt stirling2(unsigned n, unsigned k);

/// A named exact sequence n -> value, defined for n >= domain_start().
class SequenceOracle {
 public:
  SequenceOracle() = default;
  SequenceOracle(std::string name, int domain_start, std::function<BigInt(int)> eval)
      : name_(std::move(name)), domain_start_(domain_start), eval_(std::move(eval)) {}

  const std::string& name() const { return name_; }
  int domain_start() const { return domain_start_; }

  BigInt operator()(int n) const {
    if (!eval_) throw std::logic_error("empty sequence oracle");
    if (n < domain_start_)
      throw std::domain_error("sequence " + name_ + " undefined below n=" +
                              std::to_string(domain_start_));
    return eval_(n);
  }

 private:
  std::string name_;
  int domain_start_ = 1;
  std::function<BigInt(int)> eval_;
};

/// Looks up a bound formula by the label used in the bound catalog
/// (e.g. "n(2^{n-1}-1)", "2n^2", "C_{k,n-1}"). OEIS-id aliases such as
/// "A185109" are accepted. Formulas with a k parameter require `k`.
SequenceOracle bound_formula(const std::string& label, std::optional<unsigned> k = std::nullopt);

std::vector<std::string> bound_formula_labels();

/// Bound valid on [from_n, next piece), e.g. the n / 2n / 3n split.
class PiecewiseOracle {
 public:
  PiecewiseOracle() = default;
  explicit PiecewiseOracle(std::vector<std::pair<int, SequenceOracle>> pieces);

  int domain_start() const;
  BigInt operator()(int n) const;
  /// Name of the formula governing n, for report text.
  const std::string& name_at(int n) const;

 private:
  const SequenceOracle& piece_at(int n) const;
  std::vector<std::pair<int, SequenceOracle>> pieces_;
};

}  // namespace acspec
