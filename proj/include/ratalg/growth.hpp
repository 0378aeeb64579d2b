#ifndef RATALG_GROWTH_HPP
#define RATALG_GROWTH_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "ratalg/gensets.hpp"
#include "ratalg/parse.hpp"

namespace ratalg {

struct GrowthRow {
  std::string family1, family2, ftext;
  int n = 0;
  long long image = 0;
  long long quadruples = 0;
  Rat cs_bound;
  long long skipped = 0;
  std::uint64_t seed = 0;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  double slope = 0;  // least-squares log-log estimate; the only inexact figure
};

namespace detail {

struct GridCounts {
  long long image, quadruples, skipped;
};

// multiplicity counting only needs values grouped, not numerically ordered
template <class V>
inline void count_runs(std::vector<V>& vals, GridCounts& out) {
  std::sort(vals.begin(), vals.end());
  for (size_t i = 0; i < vals.size();) {
    size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    ++out.image;
    out.quadruples += (long long)(j - i) * (long long)(j - i);
    i = j;
  }
}

// poles are skipped and counted; rows evaluate through one substitution each.
// All-rational grids run at the Rat level and values with word-sized canonical
// numerator and denominator sort as plain integer pairs; the key spaces stay
// disjoint, so the run counts add.
inline GridCounts grid_counts(const BiRat& f, const EvalSet& A1, const EvalSet& A2) {
  GridCounts out{0, 0, 0};
  bool poly = f.den() == BiPoly(1);
  bool plain = f.is_rational();
  for (const EvalSet* s : {&A1, &A2})
    for (const Scalar& a : s->elements)
      if (!a.is_rational()) plain = false;

  if (!plain) {
    std::vector<Scalar> vals;
    vals.reserve((size_t)A1.size() * A2.size());
    for (const Scalar& a1 : A1.elements) {
      UniPoly nu = f.num().substitute(1, a1);
      UniPoly de = poly ? UniPoly() : f.den().substitute(1, a1);
      for (const Scalar& a2 : A2.elements) {
        if (poly) {
          vals.push_back(nu.eval(a2));
          continue;
        }
        Scalar dv = de.eval(a2);
        if (dv.is_zero()) {
          ++out.skipped;
          continue;
        }
        vals.push_back(nu.eval(a2) / dv);
      }
    }
    count_runs(vals, out);
    return out;
  }

  int d1 = std::max(f.num().deg1(), f.den().deg1());
  std::vector<std::pair<long long, long long>> small;
  small.reserve((size_t)A1.size() * A2.size());
  std::vector<Rat> wide;
  constexpr long long kMax = std::numeric_limits<long long>::max();
  auto keep = [&](const Rat& v) {
    const Int nu = rat_num(v), de = rat_den(v);
    if (nu >= -kMax && nu <= kMax && de <= kMax)
      small.emplace_back((long long)nu, (long long)de);
    else
      wide.push_back(v);
  };
  auto horner = [](const std::vector<Rat>& c, const Rat& x) {
    Rat acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  std::vector<Rat> pw(d1 + 1), nrow, drow;
  for (const Scalar& a1 : A1.elements) {
    pw[0] = 1;
    for (int i = 1; i <= d1; ++i) pw[i] = pw[i - 1] * a1.as_rat();
    nrow.assign(std::max(f.num().deg2(), 0) + 1, Rat(0));
    for (const auto& [e, c] : f.num().terms()) nrow[e.second] += c.as_rat() * pw[e.first];
    if (poly) {
      for (const Scalar& a2 : A2.elements) keep(horner(nrow, a2.as_rat()));
      continue;
    }
    drow.assign(f.den().deg2() + 1, Rat(0));
    for (const auto& [e, c] : f.den().terms()) drow[e.second] += c.as_rat() * pw[e.first];
    for (const Scalar& a2 : A2.elements) {
      Rat dv = horner(drow, a2.as_rat());
      if (dv == 0) {
        ++out.skipped;
        continue;
      }
      keep(horner(nrow, a2.as_rat()) / dv);
    }
  }
  count_runs(small, out);
  count_runs(wide, out);
  return out;
}

inline std::uint64_t mix_seed(std::uint64_t seed, int side, int n) {
  SplitMix64 rng{seed ^ ((std::uint64_t)side << 32) ^ (std::uint64_t)(std::uint32_t)n};
  return rng.next();
}

}  // namespace detail

inline GrowthReport run_growth(const BiRat& f, const SetFamily& fam1, const SetFamily& fam2,
                               const std::vector<int>& sizes, std::uint64_t seed,
                               int workers = 0) {
  if (sizes.empty()) throw input_error("empty size sweep");
  std::string ftext = print_birat(f);

  auto point = [&](int n) {
    EvalSet A1 = gen_set(fam1, n, detail::mix_seed(seed, 1, n));
    EvalSet A2 = gen_set(fam2, n, detail::mix_seed(seed, 2, n));
    detail::GridCounts c = detail::grid_counts(f, A1, A2);
    GrowthRow row{fam1.id(), fam2.id(), ftext, n, c.image, c.quadruples, Rat(0), c.skipped, seed};
    long long valid = (long long)A1.size() * (long long)A2.size() - c.skipped;
    if (c.quadruples > 0) row.cs_bound = Rat(Int(valid) * Int(valid), Int(c.quadruples));
    return row;
  };

  std::vector<GrowthRow> rows(sizes.size());
  int pool = workers > 0 ? workers : (int)std::thread::hardware_concurrency();
  if (pool < 1) pool = 1;
  pool = std::min<int>(pool, (int)sizes.size());

  std::atomic<std::size_t> cursor{0};
  auto drain = [&]() {
    for (std::size_t i; (i = cursor.fetch_add(1)) < sizes.size();) rows[i] = point(sizes[i]);
  };
  if (pool == 1) {
    drain();
  } else {
    std::vector<std::future<void>> futs;
    for (int w = 0; w < pool; ++w) futs.push_back(std::async(std::launch::async, drain));
    std::exception_ptr err;
    for (auto& fu : futs) {
      try {
        fu.get();
      } catch (...) {
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const GrowthRow& x, const GrowthRow& y) { return x.n < y.n; });

  GrowthReport report{std::move(rows), 0};
  std::vector<std::pair<double, double>> pts;
  for (const GrowthRow& r : report.rows)
    if (r.n > 0 && r.image > 0) pts.emplace_back(std::log((double)r.n), std::log((double)r.image));
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, k = (double)pts.size();
    for (auto [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double denom = k * sxx - sx * sx;
    if (denom > 0) report.slope = (k * sxy - sx * sy) / denom;
  }
  return report;
}

// slope stays out on purpose, every emitted field is exact
inline std::string to_csv(const GrowthReport& report) {
  std::string out = "family1,family2,f,n,image,Q,cs_bound,skipped,seed\n";
  for (const GrowthRow& r : report.rows) {
    out += r.family1 + "," + r.family2 + "," + r.ftext + "," + std::to_string(r.n) + "," +
           std::to_string(r.image) + "," + std::to_string(r.quadruples) + "," +
           detail::rat_text(r.cs_bound) + "," + std::to_string(r.skipped) + "," +
           std::to_string(r.seed) + "\n";
  }
  return out;
}

}  // namespace ratalg

#endif
