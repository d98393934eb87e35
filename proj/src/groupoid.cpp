#include "acspec/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace acspec {

Groupoid::Groupoid(int size, std::vector<uint8_t> table, std::string name)
    : size_(size), table_(std::move(table)), name_(std::move(name)) {
  if (size_ < 1) throw std::invalid_argument("groupoid size must be >= 1");
  if (size_ > 255) throw std::invalid_argument("groupoid size must be <= 255");
  if (table_.size() != static_cast<size_t>(size_) * size_)
    throw std::invalid_argument("Cayley table must have size^2 entries");
  for (uint8_t v : table_)
    if (v >= size_) throw std::invalid_argument("Cayley table entry out of range");
}

bool Groupoid::is_commutative() const {
  for (int a = 0; a < size_; ++a)
    for (int b = a + 1; b < size_; ++b)
      if (apply(a, b) != apply(b, a)) return false;
  return true;
}

Groupoid Groupoid::opposite() const {
  std::vector<uint8_t> t(table_.size());
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) t[a * size_ + b] = apply(b, a);
  std::string n = name_.empty() ? "" : name_ + "^op";
  return Groupoid(size_, std::move(t), std::move(n));
}

Assignment::Assignment(const std::vector<uint8_t>& values) {
  values_.assign(values.size() + 1, -1);
  for (size_t i = 0; i < values.size(); ++i) values_[i + 1] = values[i];
}

void Assignment::set(int var, uint8_t value) {
  if (var < 1) throw std::invalid_argument("variable label must be >= 1");
  if (var >= static_cast<int>(values_.size())) values_.resize(var + 1, -1);
  values_[var] = value;
}

std::optional<uint8_t> Assignment::get(int var) const {
  if (var < 1 || var >= static_cast<int>(values_.size()) || values_[var] < 0) return std::nullopt;
  return static_cast<uint8_t>(values_[var]);
}

uint8_t evaluate(const Groupoid& g, const Term& t, const Assignment& a) {
  if (t.is_leaf()) {
    auto v = a.get(t.var());
    if (!v) throw std::invalid_argument("assignment misses x" + std::to_string(t.var()));
    if (*v >= g.size()) throw std::invalid_argument("assigned value out of range");
    return *v;
  }
  return g.apply(evaluate(g, t.left(), a), evaluate(g, t.right(), a));
}

bool satisfies_identity(const Groupoid& g, const Identity& id, uint64_t assignment_cap) {
  std::vector<int> vars = id.lhs.var_set();
  std::vector<int> rhs_vars = id.rhs.var_set();
  vars.insert(vars.end(), rhs_vars.begin(), rhs_vars.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  const uint64_t k = g.size();
  uint64_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (total > assignment_cap / k)
      throw SizeLimitError("identity check exceeds assignment cap");
    total *= k;
  }

  Assignment a;
  std::vector<uint8_t> digits(vars.size(), 0);
  for (int v : vars) a.set(v, 0);
  for (uint64_t idx = 0;; ++idx) {
    if (evaluate(g, id.lhs, a) != evaluate(g, id.rhs, a)) return false;
    if (idx + 1 == total) break;
    // odometer over the variable values
    for (size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < k) {
        a.set(vars[i], digits[i]);
        break;
      }
      digits[i] = 0;
      a.set(vars[i], 0);
    }
  }
  return true;
}

const std::vector<Identity>& identity_catalog() {
  static const std::vector<Identity> catalog = [] {
    const std::pair<const char*, const char*> defs[] = {
        {"xy", "x"},
        {"xy", "yx"},
        {"(xy)z", "(xz)y"},
        {"x(yz)", "y(xz)"},
        {"x(yz)", "x(zy)"},
        {"x(yz)", "z(yx)"},
        {"w(x(yz))", "w((xy)z)"},
        {"(wx)(yz)", "(w(xy))z"},
        {"w(x(yz))", "((wx)y)z"},
        {"((wx)y)z", "((wy)x)z"},
        {"((wx)y)z", "((wx)z)y"},
        {"(wx)(yz)", "(wy)(xz)"},
        {"(w(xy))z", "(w(xz))y"},
        {"w(x(yz))", "(w(xy))z"},
        {"(v(wx))(yz)", "(vw)(x(yz))"},
        {"(((vw)x)y)z", "v(w(x(yz)))"},
        {"v(w(x(yz)))", "((v(wx))y)z"},
        {"(vw)(x(yz))", "(((vw)x)y)z"},
    };
    std::vector<Identity> out;
    int i = 1;
    for (auto [l, r] : defs) {
      out.push_back({parse_term(l), parse_term(r), std::to_string(i)});
      ++i;
    }
    return out;
  }();
  return catalog;
}

const Identity& catalog_identity(const std::string& label) {
  for (const Identity& id : identity_catalog())
    if (id.label == label) return id;
  throw std::invalid_argument("unknown identity label '" + label + "'");
}

std::optional<std::vector<uint8_t>> find_isomorphism(const Groupoid& g, const Groupoid& h,
                                                     bool anti) {
  if (g.size() != h.size()) throw std::invalid_argument("isomorphism search: size mismatch");
  if (g.size() > 8) throw SizeLimitError("isomorphism search limited to size <= 8");
  const int k = g.size();
  std::vector<uint8_t> f(k);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool good = true;
    for (int a = 0; a < k && good; ++a)
      for (int b = 0; b < k; ++b) {
        uint8_t rhs = anti ? h.apply(f[b], f[a]) : h.apply(f[a], f[b]);
        if (f[g.apply(a, b)] != rhs) {
          good = false;
          break;
        }
      }
    if (good) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

Groupoid parse_cayley_text(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '/', '\n');
  std::vector<std::vector<int>> rows;
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("Cayley text: non-numeric entry in '" + line + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("Cayley text: empty table");
  const size_t k = rows.size();
  std::vector<uint8_t> table;
  table.reserve(k * k);
  for (const auto& row : rows) {
    if (row.size() != k)
      throw std::invalid_argument("Cayley text: expected " + std::to_string(k) +
                                  " entries per row, got " + std::to_string(row.size()));
    for (int v : row) {
      if (v < 0 || v >= static_cast<int>(k))
        throw std::invalid_argument("Cayley text: entry " + std::to_string(v) +
                                    " out of range for size " + std::to_string(k));
      table.push_back(static_cast<uint8_t>(v));
    }
  }
  return Groupoid(static_cast<int>(k), std::move(table));
}

Groupoid parse_cayley_json(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("table"))
    throw std::invalid_argument("Cayley document needs 'size' and 'table' fields");
  int size = doc.at("size").get<int>();
  if (size < 1) throw std::invalid_argument("Cayley document: size must be >= 1");
  std::vector<uint8_t> table;
  const auto& rows = doc.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != size)
    throw std::invalid_argument("Cayley document: table must have 'size' rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      throw std::invalid_argument("Cayley document: ragged table row");
    for (const auto& cell : row) {
      int v = cell.get<int>();
      if (v < 0 || v >= size) throw std::invalid_argument("Cayley document: entry out of range");
      table.push_back(static_cast<uint8_t>(v));
    }
  }
  std::string name = doc.value("name", std::string());
  return Groupoid(size, std::move(table), std::move(name));
}

Groupoid load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_cayley_json(text);
  return parse_cayley_text(text);
}

}  // namespace acspec
