#include "acspec/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace acspec {

namespace {

using TableSet = std::unordered_set<FunctionTable, FunctionTableHash>;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

/// Runs body(worker, begin, end) over a contiguous partition of [0, njobs).
template <typename Fn>
void parallel_chunks(size_t njobs, int threads, Fn&& body) {
  threads = std::max(1, threads);
  if (threads == 1 || njobs < 2) {
    body(0, size_t{0}, njobs);
    return;
  }
  size_t nworkers = std::min<size_t>(threads, njobs);
  std::vector<std::thread> pool;
  size_t chunk = (njobs + nworkers - 1) / nworkers;
  for (size_t w = 1; w < nworkers; ++w) {
    size_t b = std::min(njobs, w * chunk), e = std::min(njobs, (w + 1) * chunk);
    if (b < e) pool.emplace_back([&body, w, b, e] { body(w, b, e); });
  }
  body(0, size_t{0}, std::min(njobs, chunk));
  for (auto& t : pool) t.join();
}

/// Merged per-worker sets; the content is independent of the partition.
std::vector<FunctionTable> merge_locals(std::vector<TableSet>& locals) {
  TableSet merged = std::move(locals[0]);
  for (size_t w = 1; w < locals.size(); ++w)
    for (auto it = locals[w].begin(); it != locals[w].end();)
      merged.insert(std::move(locals[w].extract(it++).value()));
  std::vector<FunctionTable> out;
  out.reserve(merged.size());
  for (auto it = merged.begin(); it != merged.end();)
    out.push_back(std::move(merged.extract(it++).value()));
  return out;
}

struct LevelOutcome {
  std::vector<FunctionTable> tables;
  bool capped = false;
};

void record_level(SpectrumReport& report, const std::vector<FunctionTable>& tables,
                  std::chrono::steady_clock::time_point level_start) {
  report.values.push_back(tables.size());
  report.wall_ms.push_back(ms_since(level_start));
  report.distinct_bytes.push_back(tables.empty() ? 0 : tables.size() * tables[0].byte_size());
}

SpectrumReport dp_spectrum(const Groupoid& g, int n_max, SpectrumKind kind,
                           const SpectrumOptions& opts) {
  SpectrumReport report{g.name(), kind, Engine::dp, n_max, {}, {}, {}, false};
  const int k = g.size();
  const int threads = std::max(1, opts.threads);

  std::vector<std::vector<FunctionTable>> levels;
  levels.push_back({FunctionTable::identity(k)});
  auto t0 = std::chrono::steady_clock::now();
  record_level(report, levels[0], t0);

  for (int m = 2; m <= n_max; ++m) {
    if (FunctionTable::pow_u64(k, m) > opts.max_table_entries) {
      report.truncated = true;
      break;
    }
    auto level_start = std::chrono::steady_clock::now();
    std::vector<TableSet> locals(threads);

    if (kind == SpectrumKind::associative) {
      // every bracketing splits at the root into a prefix/suffix pair
      std::vector<std::pair<int, size_t>> jobs;
      for (int p = 1; p < m; ++p)
        for (size_t fi = 0; fi < levels[p - 1].size(); ++fi) jobs.emplace_back(p, fi);
      parallel_chunks(jobs.size(), threads, [&](size_t w, size_t b, size_t e) {
        for (size_t j = b; j < e; ++j) {
          auto [p, fi] = jobs[j];
          const FunctionTable& f = levels[p - 1][fi];
          for (const FunctionTable& h : levels[m - p - 1])
            locals[w].insert(detail::compose_prefix(f, h, g));
        }
      });
    } else {
      // root split into an arbitrary nonempty proper variable subset
      for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        int p = std::popcount(mask);
        const auto& fs = levels[p - 1];
        const auto& hs = levels[m - p - 1];
        const bool prefix = mask == (1u << p) - 1u;
        detail::SplitIndex idx;
        if (!prefix) {
          std::vector<int> positions;
          for (int j = 0; j < m; ++j)
            if (mask >> j & 1) positions.push_back(j + 1);
          idx = detail::make_split_index(m, k, positions);
        }
        parallel_chunks(fs.size(), threads, [&](size_t w, size_t b, size_t e) {
          for (size_t fi = b; fi < e; ++fi)
            for (const FunctionTable& h : hs)
              locals[w].insert(prefix ? detail::compose_prefix(fs[fi], h, g)
                                      : detail::compose_with_index(fs[fi], h, idx, g));
        });
      }
    }

    std::vector<FunctionTable> merged = merge_locals(locals);
    if (merged.size() > opts.max_functions) {
      report.truncated = true;
      break;
    }
    record_level(report, merged, level_start);
    levels.push_back(std::move(merged));
  }
  return report;
}

SpectrumReport naive_spectrum(const Groupoid& g, int n_max, SpectrumKind kind,
                              const SpectrumOptions& opts) {
  SpectrumReport report{g.name(), kind, Engine::naive, n_max, {}, {}, {}, false};
  const int k = g.size();
  for (int n = 1; n <= n_max; ++n) {
    if (FunctionTable::pow_u64(k, n) > opts.max_table_entries) {
      report.truncated = true;
      break;
    }
    auto level_start = std::chrono::steady_clock::now();
    TableSet seen;
    auto visit = [&](const Term& t) { seen.insert(induced_table(g, t, opts.max_table_entries)); };
    if (kind == SpectrumKind::associative)
      for_each_bracketing(n, visit);
    else
      for_each_full_linear_term(n, visit);
    if (seen.size() > opts.max_functions) {
      report.truncated = true;
      break;
    }
    report.values.push_back(seen.size());
    report.wall_ms.push_back(ms_since(level_start));
    report.distinct_bytes.push_back(seen.empty() ? 0 : seen.size() * seen.begin()->byte_size());
  }
  return report;
}

SpectrumReport run_spectrum(const Groupoid& g, int n_max, SpectrumKind kind, Engine engine,
                            const SpectrumOptions& opts) {
  int cap = engine == Engine::naive
                ? opts.naive_max_n
                : (kind == SpectrumKind::associative ? opts.dp_max_n_assoc : opts.dp_max_n_ac);
  if (n_max < 1 || n_max > cap)
    throw SizeLimitError("n_max " + std::to_string(n_max) + " outside 1.." + std::to_string(cap) +
                         " for this engine");
  return engine == Engine::dp ? dp_spectrum(g, n_max, kind, opts)
                              : naive_spectrum(g, n_max, kind, opts);
}

}  // namespace

SpectrumReport associative_spectrum(const Groupoid& g, int n_max, Engine engine,
                                    const SpectrumOptions& opts) {
  return run_spectrum(g, n_max, SpectrumKind::associative, engine, opts);
}

SpectrumReport ac_spectrum(const Groupoid& g, int n_max, Engine engine,
                           const SpectrumOptions& opts) {
  return run_spectrum(g, n_max, SpectrumKind::ac, engine, opts);
}

uint64_t count_depth_classes(const DepthClassQuery& q) {
  if (q.n < 1) throw std::invalid_argument("depth classes: n must be >= 1");
  if (q.modulus < 1) throw std::invalid_argument("depth classes: modulus must be >= 1");
  if (q.scope == TermScope::full_linear && q.n > 7)
    throw SizeLimitError("full-linear depth class counting limited to n <= 7");

  const int n = q.n;
  const int mod = q.modulus;
  std::unordered_set<std::string> classes;

  // position-indexed depths of one bracketing shape
  auto position_depths = [&](const Term& shape) {
    std::vector<int> pd(n);
    DepthKind dk = q.kind == DepthClassKind::leftmost_left ? DepthKind::left
                   : q.kind == DepthClassKind::full        ? DepthKind::full
                   : q.kind == DepthClassKind::left        ? DepthKind::left
                                                           : DepthKind::right;
    DepthVector dv = depth_vector(shape, dk);
    for (int pos = 0; pos < n; ++pos) pd[pos] = dv.values.at(pos + 1) % mod;
    return pd;
  };

  for_each_bracketing(n, [&](const Term& shape) {
    std::vector<int> pd = position_depths(shape);
    if (q.scope == TermScope::bracketings) {
      if (q.kind == DepthClassKind::leftmost_left) {
        classes.insert(std::string(1, static_cast<char>(pd[0])));
      } else {
        std::string sig(pd.begin(), pd.end());
        classes.insert(sig);
      }
      return;
    }
    // full linear terms sharing this shape: labels permuted, depths fixed by position
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::string sig(n, 0);
    do {
      if (q.kind == DepthClassKind::leftmost_left) {
        std::string key{static_cast<char>(perm[0]), static_cast<char>(pd[0])};
        classes.insert(key);
      } else {
        for (int pos = 0; pos < n; ++pos) sig[perm[pos] - 1] = static_cast<char>(pd[pos]);
        classes.insert(sig);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return classes.size();
}

}  // namespace acspec
