#include "acspec/term.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace acspec {

Term Term::leaf(int var) {
  if (var < 1) throw std::invalid_argument("leaf label must be >= 1");
  return Term(std::make_shared<Node>(Node{var, 1, nullptr, nullptr}));
}

Term Term::node(const Term& left, const Term& right) {
  return Term(std::make_shared<Node>(
      Node{0, left.size() + right.size(), left.node_, right.node_}));
}

int Term::var() const {
  if (!is_leaf()) throw std::logic_error("var() on internal node");
  return node_->var;
}

Term Term::left() const {
  if (is_leaf()) throw std::logic_error("left() on leaf");
  return Term(node_->left);
}

Term Term::right() const {
  if (is_leaf()) throw std::logic_error("right() on leaf");
  return Term(node_->right);
}

bool Term::equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->var != b->var || a->size != b->size) return false;
  if (a->var != 0) return true;
  return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
}

bool Term::operator==(const Term& other) const { return equal(node_.get(), other.node_.get()); }

std::vector<int> Term::leaf_sequence() const {
  std::vector<int> out;
  out.reserve(size());
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_leaf()) {
      out.push_back(t.var());
    } else {
      walk(t.left());
      walk(t.right());
    }
  };
  walk(*this);
  return out;
}

std::vector<int> Term::var_set() const {
  std::vector<int> v = leaf_sequence();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int Term::leftmost_var() const {
  const Node* n = node_.get();
  while (n->var == 0) n = n->left.get();
  return n->var;
}

int Term::rightmost_var() const {
  const Node* n = node_.get();
  while (n->var == 0) n = n->right.get();
  return n->var;
}

bool Term::is_linear() const {
  std::vector<int> v = leaf_sequence();
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool Term::is_bracketing() const {
  std::vector<int> v = leaf_sequence();
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != i + 1) return false;
  return true;
}

bool Term::is_full_linear() const {
  std::vector<int> v = leaf_sequence();
  std::sort(v.begin(), v.end());
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != i + 1) return false;
  return true;
}

DepthVector depth_vector(const Term& t, DepthKind kind) {
  if (!t.is_linear()) throw std::invalid_argument("depth_vector: duplicate leaf labels");
  DepthVector dv{kind, {}};
  std::function<void(const Term&, int, int, int)> walk = [&](const Term& u, int d, int dl,
                                                             int dr) {
    if (u.is_leaf()) {
      int v = kind == DepthKind::full ? d : kind == DepthKind::left ? dl : dr;
      dv.values[u.var()] = v;
      return;
    }
    walk(u.left(), d + 1, dl + 1, dr);
    walk(u.right(), d + 1, dl, dr + 1);
  };
  walk(t, 0, 0, 0);
  return dv;
}

LeftmostDecomposition leftmost_decomposition(const Term& t) {
  std::vector<Term> tail;
  Term cur = t;
  while (!cur.is_leaf()) {
    tail.push_back(cur.right());
    cur = cur.left();
  }
  std::reverse(tail.begin(), tail.end());
  return {cur, std::move(tail)};
}

Term leftmost_bracketing(std::span<const Term> terms) {
  if (terms.empty()) throw std::invalid_argument("leftmost_bracketing: empty list");
  Term acc = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) acc = Term::node(acc, terms[i]);
  return acc;
}

Term rightmost_bracketing(std::span<const Term> terms) {
  if (terms.empty()) throw std::invalid_argument("rightmost_bracketing: empty list");
  Term acc = terms.back();
  for (size_t i = terms.size() - 1; i-- > 0;) acc = Term::node(terms[i], acc);
  return acc;
}

Term standard_variant(const Term& t, BracketingForm which) {
  if (!t.is_linear()) throw std::invalid_argument("standard_variant: duplicate leaf labels");
  std::vector<int> vars = t.leaf_sequence();
  if (which == BracketingForm::left_sorted || which == BracketingForm::right_sorted)
    std::sort(vars.begin(), vars.end());
  std::vector<Term> leaves;
  leaves.reserve(vars.size());
  for (int v : vars) leaves.push_back(Term::leaf(v));
  bool left = which == BracketingForm::left_occurrence || which == BracketingForm::left_sorted;
  return left ? leftmost_bracketing(leaves) : rightmost_bracketing(leaves);
}

namespace {

bool is_nest(const Term& t) {
  if (t.is_leaf()) return true;
  if (t.left().is_leaf()) return is_nest(t.right());
  if (t.right().is_leaf()) return is_nest(t.left());
  return false;
}

// the unique leaf-leaf subterm inside a nontrivial nest
std::pair<int, int> nest_eggs(Term t) {
  while (!(t.left().is_leaf() && t.right().is_leaf()))
    t = t.left().is_leaf() ? t.right() : t.left();
  int a = t.left().var(), b = t.right().var();
  return {std::min(a, b), std::max(a, b)};
}

void canonicalize_blocks(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

}  // namespace

EggPartition egg_partition(const Term& t) {
  if (!t.is_full_linear()) throw std::invalid_argument("egg_partition: not a full linear term");
  if (t.size() < 2) throw std::invalid_argument("egg_partition: no eggs in a single leaf");
  EggPartition out;
  std::vector<bool> in_pair(t.size() + 1, false);
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.is_leaf()) return;
    if (is_nest(u)) {
      auto [a, b] = nest_eggs(u);
      out.blocks.push_back({a, b});
      in_pair[a] = in_pair[b] = true;
      return;
    }
    walk(u.left());
    walk(u.right());
  };
  walk(t);
  for (int v = 1; v <= t.size(); ++v)
    if (!in_pair[v]) out.blocks.push_back({v});
  canonicalize_blocks(out.blocks);
  return out;
}

RootedPartition rooted_partition(const Term& t) {
  auto [head, tail] = leftmost_decomposition(t);
  RootedPartition out{head.var(), {}};
  for (const Term& u : tail) out.blocks.push_back(u.var_set());
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

RootedOrderedPartition rooted_ordered_partition(const Term& t) {
  auto [head, tail] = leftmost_decomposition(t);
  RootedOrderedPartition out{head.var(), {}};
  for (const Term& u : tail) out.blocks.push_back(u.var_set());
  return out;
}

namespace {

void each_shape(int lo, int span, const std::function<void(const Term&)>& fn) {
  if (span == 1) {
    fn(Term::leaf(lo));
    return;
  }
  for (int ls = 1; ls < span; ++ls)
    each_shape(lo, ls, [&](const Term& l) {
      each_shape(lo + ls, span - ls, [&](const Term& r) { fn(Term::node(l, r)); });
    });
}

}  // namespace

void for_each_bracketing(int n, const std::function<void(const Term&)>& fn) {
  if (n < 1 || n > kMaxBracketingSize)
    throw SizeLimitError("bracketing size " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxBracketingSize));
  each_shape(1, n, fn);
}

void for_each_full_linear_term(int n, const std::function<void(const Term&)>& fn) {
  if (n < 1 || n > kMaxFullLinearSize)
    throw SizeLimitError("full linear term size " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxFullLinearSize));
  std::vector<int> perm(n);
  each_shape(1, n, [&](const Term& shape) {
    std::iota(perm.begin(), perm.end(), 1);
    do {
      fn(relabel(shape, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

std::vector<Term> enumerate_bracketings(int n) {
  std::vector<Term> out;
  for_each_bracketing(n, [&](const Term& t) { out.push_back(t); });
  return out;
}

Term relabel(const Term& t, std::span<const int> perm) {
  if (t.is_leaf()) {
    int v = t.var();
    if (v < 1 || v > static_cast<int>(perm.size()))
      throw std::invalid_argument("relabel: leaf label outside permutation domain");
    return Term::leaf(perm[v - 1]);
  }
  return Term::node(relabel(t.left(), perm), relabel(t.right(), perm));
}

namespace {

struct Tok {
  enum Kind { open, close, variable, end } kind;
  int var = 0;
  size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Tok next() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '*')) ++pos_;
    if (pos_ >= s_.size()) return {Tok::end, 0, pos_};
    size_t at = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      return {Tok::open, 0, at};
    }
    if (c == ')') {
      ++pos_;
      return {Tok::close, 0, at};
    }
    if (c == 'x' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        if (v > 1'000'000) throw ParseError("variable index too large", at);
        ++pos_;
      }
      if (v < 1) throw ParseError("variable index must be >= 1", at);
      return {Tok::variable, static_cast<int>(v), at};
    }
    static constexpr std::string_view kLetters = "vwxyz";
    if (auto p = kLetters.find(c); p != std::string_view::npos) {
      ++pos_;
      return {Tok::variable, static_cast<int>(p) + 1, at};
    }
    throw ParseError(std::string("unknown token '") + c + "'", at);
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  Term parse_top() {
    Term t = parse_group(/*outermost=*/true);
    if (cur_.kind != Tok::end) throw ParseError("trailing input", cur_.offset);
    return t;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  // One or (at the outermost level / inside parens) exactly two juxtaposed terms.
  Term parse_group(bool outermost) {
    Term first = parse_primary();
    if (at_group_end(outermost)) return first;
    Term second = parse_primary();
    if (!at_group_end(outermost))
      throw ParseError("expected ')' or end of input; more than two juxtaposed terms need parentheses",
                       cur_.offset);
    return Term::node(first, second);
  }

  bool at_group_end(bool outermost) const {
    return cur_.kind == (outermost ? Tok::end : Tok::close);
  }

  Term parse_primary() {
    if (cur_.kind == Tok::variable) {
      Term t = Term::leaf(cur_.var);
      advance();
      return t;
    }
    if (cur_.kind == Tok::open) {
      size_t open_at = cur_.offset;
      advance();
      Term t = parse_group(/*outermost=*/false);
      if (cur_.kind != Tok::close) throw ParseError("unbalanced parenthesis", open_at);
      advance();
      return t;
    }
    if (cur_.kind == Tok::end) throw ParseError("unexpected end of input", cur_.offset);
    throw ParseError("unexpected ')'", cur_.offset);
  }

  Lexer lex_;
  Tok cur_;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse_top(); }

namespace {

void format_into(const Term& t, std::string& out, bool parens) {
  if (t.is_leaf()) {
    out += 'x';
    out += std::to_string(t.var());
    return;
  }
  if (parens) out += '(';
  format_into(t.left(), out, true);
  out += ' ';
  format_into(t.right(), out, true);
  if (parens) out += ')';
}

}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  format_into(t, out, false);
  return out;
}

}  // namespace acspec
