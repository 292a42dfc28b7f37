#include "windtree/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>
#include <utility>

#include "windtree/hyperbolic.hpp"

namespace windtree {

namespace {

constexpr int kMaxUnprunedDepth = 20;
constexpr int kMaxPrunedDepth = 4096;
constexpr double kMaxThreshold = 30.0;

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw InvalidArgument("64-bit overflow in word ball");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw InvalidArgument("64-bit overflow in word ball");
  return out;
}

SmallMatrix checked_product(const SmallMatrix& x, const SmallMatrix& y) {
  return SmallMatrix::unchecked(checked_add(checked_mul(x.a(), y.a()), checked_mul(x.b(), y.c())),
                                 checked_add(checked_mul(x.a(), y.b()), checked_mul(x.b(), y.d())),
                                 checked_add(checked_mul(x.c(), y.a()), checked_mul(x.d(), y.c())),
                                 checked_add(checked_mul(x.c(), y.b()), checked_mul(x.d(), y.d())));
}

std::int64_t checked_norm2(const SmallMatrix& m) {
  std::int64_t n = 0;
  for (std::int64_t x : {m.a(), m.b(), m.c(), m.d()}) n = checked_add(n, checked_mul(x, x));
  return n;
}

struct Dfs {
  const Alphabet<std::int64_t>& gamma0;
  const Alphabet<std::int64_t>& rho;
  int depth;
  std::optional<std::int64_t> max_norm;
  const std::function<void(const WordBallVisit&)>& visit;

  void run(const SmallMatrix& g, const SmallMatrix& image, int length, std::optional<Letter> last) {
    visit(WordBallVisit{g, image, length});
    if (length == depth) return;
    for (Letter x : kLetters) {
      if (last && *last == inverse(x)) continue;
      SmallMatrix h = checked_product(g, gamma0[x]);
      if (max_norm && checked_norm2(h) > *max_norm) continue;
      run(h, checked_product(image, rho[x]), length + 1, x);
    }
  }
};

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Calls f(a, b, c, d) for every PSL-canonical Gamma0 matrix with norm <= bound.
template <class F>
void scan_gamma0(std::int64_t bound, F&& f) {
  // c = 0: (1 2m; 0 1).
  for (std::int64_t m = 0; 2 + 4 * m * m <= bound; ++m) {
    f(1, 2 * m, 0, 1);
    if (m > 0) f(1, -2 * m, 0, 1);
  }
  for (std::int64_t c = 2; c * c + 1 <= bound; c += 2) {
    const auto dmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound - c * c))) + 1;
    for (std::int64_t d = -dmax; d <= dmax; ++d) {
      if ((d & 1) == 0 || c * c + d * d > bound) continue;
      if (std::gcd(c, d) != 1) continue;
      // a0 d - b0 c = 1
      std::int64_t x = 0, y = 0;
      const std::int64_t g = ext_gcd(d, c, x, y);  // x d + y c = g = +-1
      const std::int64_t a0 = x * g;
      const std::int64_t b0 = -y * g;
      // a = a0 + k c, b = b0 + k d; minimize the norm over real k first.
      const double k_star = -static_cast<double>(a0 * c + b0 * d) / static_cast<double>(c * c + d * d);
      const auto k0 = static_cast<std::int64_t>(std::floor(k_star));
      auto emit = [&](std::int64_t k) {
        const __int128 a = static_cast<__int128>(a0) + static_cast<__int128>(k) * c;
        const __int128 b = static_cast<__int128>(b0) + static_cast<__int128>(k) * d;
        const __int128 n = a * a + b * b + static_cast<__int128>(c * c + d * d);
        if (n > bound) return false;
        if ((b & 1) == 0) f(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), c, d);
        return true;
      };
      for (std::int64_t k = k0;; --k) {
        if (!emit(k)) break;
      }
      for (std::int64_t k = k0 + 1;; ++k) {
        if (!emit(k)) break;
      }
    }
  }
}

std::pair<std::int64_t, std::int64_t> sign_normalized(std::int64_t a, std::int64_t c) {
  if (c < 0 || (c == 0 && a < 0)) return {-a, -c};
  return {a, c};
}

// (norm, word length) of filtered elements, from one pruned enumeration.
std::vector<std::pair<std::int64_t, int>> filtered_norms(const Subgroup& subgroup, double r_max,
                                                         int depth) {
  if (depth < 1 || depth > kMaxPrunedDepth) throw InvalidArgument("depth out of range");
  std::vector<std::pair<std::int64_t, int>> out;
  enumerate_word_ball(subgroup.sigma, depth, norm_bound(r_max), [&](const WordBallVisit& v) {
    if (subgroup.accepts_image(v.rho_image)) out.emplace_back(v.element.norm2(), v.length);
  });
  return out;
}

// Normalized vector -> shortest word length reaching it.
std::unordered_map<std::int64_t, std::unordered_map<std::int64_t, int>> cylinder_vectors(
    const Subgroup& subgroup, double l_max, int depth) {
  if (depth < 0 || depth > kMaxUnprunedDepth) throw InvalidArgument("depth out of range");
  const double l2 = l_max * l_max * (1.0 + 1e-12);
  std::unordered_map<std::int64_t, std::unordered_map<std::int64_t, int>> out;
  enumerate_word_ball(subgroup.sigma, depth, std::nullopt, [&](const WordBallVisit& v) {
    if (!subgroup.accepts_image(v.rho_image)) return;
    const auto [a, c] = sign_normalized(v.element.a(), v.element.c());
    if (static_cast<double>(a) * a + static_cast<double>(c) * c > l2) return;
    auto [it, inserted] = out[a].try_emplace(c, v.length);
    if (!inserted) it->second = std::min(it->second, v.length);
  });
  return out;
}

}  // namespace

Subgroup Subgroup::parse(const std::string& group, const std::string& sigma) {
  const Sigma s = parse_sigma(sigma);
  if (group == "gamma0") return gamma0();
  if (group == "kernel") return kernel(s);
  if (group == "bad") return bad(s);
  throw ParseError("unknown group '" + group + "' (expected gamma0, kernel or bad)");
}

bool Subgroup::accepts_image(const SmallMatrix& rho_image) const {
  switch (kind) {
    case SubgroupKind::Gamma0: return true;
    case SubgroupKind::Kernel: return is_kernel_image(rho_image);
    case SubgroupKind::Bad: return is_bad_image(sigma, rho_image);
  }
  return false;
}

std::string Subgroup::name() const {
  switch (kind) {
    case SubgroupKind::Gamma0: return "gamma0";
    case SubgroupKind::Kernel: return "kernel(" + std::string(to_string(sigma)) + ")";
    case SubgroupKind::Bad: return "bad(" + std::string(to_string(sigma)) + ")";
  }
  return "?";
}

std::int64_t norm_bound(double R) {
  if (!(R >= 0.0) || R > kMaxThreshold) throw InvalidArgument("threshold out of range [0, 30]");
  return static_cast<std::int64_t>(std::floor(2.0 * std::cosh(R) * (1.0 + 1e-12)));
}

void enumerate_word_ball(Sigma sigma, int depth, std::optional<std::int64_t> max_norm,
                         const std::function<void(const WordBallVisit&)>& visit) {
  if (depth < 0) throw InvalidArgument("depth must be non-negative");
  if (!max_norm && depth > kMaxUnprunedDepth) {
    throw InvalidArgument("unpruned word ball depth is limited to 20");
  }
  Dfs dfs{gamma0_alphabet_small(), rho_alphabet_small(sigma), depth, max_norm, visit};
  dfs.run(SmallMatrix::identity(), SmallMatrix::identity(), 0, std::nullopt);
}

std::uint64_t orbital_exact_gamma0(double R, bool cross_validate) {
  std::uint64_t count = 0;
  const auto& alphabet = gamma0_alphabet();
  scan_gamma0(norm_bound(R), [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    ++count;
    if (cross_validate) {
      const GroupElement g(a, b, c, d);
      if (!evaluate(sanov_decompose(g), alphabet).psl_equal(g)) {
        throw Error("lattice scan and word decomposition disagree");
      }
    }
  });
  return count;
}

BfsCount orbital_bfs(const Subgroup& subgroup, double R, int depth) {
  const auto series = orbital_series_bfs(subgroup, {R}, depth);
  return BfsCount{series.counts[0], depth, series.saturated[0]};
}

CountSeries orbital_series_exact(const std::vector<double>& thresholds) {
  CountSeries s;
  s.kind = SeriesKind::Orbital;
  if (thresholds.empty()) return s;
  std::vector<std::int64_t> norms;
  const double r_max = *std::max_element(thresholds.begin(), thresholds.end());
  scan_gamma0(norm_bound(r_max),
              [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
                norms.push_back(a * a + b * b + c * c + d * d);
              });
  std::sort(norms.begin(), norms.end());
  for (double R : thresholds) {
    s.thresholds.push_back(R);
    s.counts.push_back(static_cast<std::uint64_t>(
        std::upper_bound(norms.begin(), norms.end(), norm_bound(R)) - norms.begin()));
    s.exact.push_back(true);
    s.saturated.push_back(true);
  }
  return s;
}

CountSeries orbital_series_bfs(const Subgroup& subgroup, const std::vector<double>& thresholds,
                               int depth) {
  CountSeries s;
  s.kind = SeriesKind::Orbital;
  s.bfs_depth = depth;
  if (thresholds.empty()) return s;
  const double r_max = *std::max_element(thresholds.begin(), thresholds.end());
  const auto found = filtered_norms(subgroup, r_max, depth);
  for (double R : thresholds) {
    const std::int64_t bound = norm_bound(R);
    std::uint64_t full = 0;
    std::uint64_t shallow = 0;
    for (const auto& [norm, length] : found) {
      if (norm > bound) continue;
      ++full;
      if (length <= depth - 2) ++shallow;
    }
    s.thresholds.push_back(R);
    s.counts.push_back(full);
    s.exact.push_back(false);
    s.saturated.push_back(depth >= 2 && full == shallow);
  }
  return s;
}

std::uint64_t cylinder_count(const Subgroup& subgroup, double L, int depth, bool identify_sign) {
  if (!(L > 0.0)) throw InvalidArgument("length must be positive");
  std::uint64_t n = 0;
  for (const auto& [a, row] : cylinder_vectors(subgroup, L, depth)) n += row.size();
  return identify_sign ? n : 2 * n;
}

CountSeries cylinder_series(const Subgroup& subgroup, const std::vector<double>& lengths,
                            int depth) {
  CountSeries s;
  s.kind = SeriesKind::Cylinder;
  s.bfs_depth = depth;
  if (lengths.empty()) return s;
  const double l_max = *std::max_element(lengths.begin(), lengths.end());
  std::vector<std::pair<double, int>> vectors;
  for (const auto& [a, row] : cylinder_vectors(subgroup, l_max, depth)) {
    for (const auto& [c, length] : row) {
      vectors.emplace_back(static_cast<double>(a) * a + static_cast<double>(c) * c, length);
    }
  }
  for (double L : lengths) {
    if (!(L > 0.0)) throw InvalidArgument("length must be positive");
    const double l2 = L * L * (1.0 + 1e-12);
    std::uint64_t full = 0;
    std::uint64_t shallow = 0;
    for (const auto& [n2, length] : vectors) {
      if (n2 > l2) continue;
      ++full;
      if (length <= depth - 2) ++shallow;
    }
    s.thresholds.push_back(L);
    s.counts.push_back(full);
    s.exact.push_back(false);
    s.saturated.push_back(depth >= 2 && full == shallow);
  }
  return s;
}

std::uint64_t cylinder_lattice_scan(double L) {
  if (!(L > 0.0)) throw InvalidArgument("length must be positive");
  const double l2 = L * L * (1.0 + 1e-12);
  const auto m = static_cast<std::int64_t>(std::floor(L)) + 1;
  std::uint64_t n = 0;
  for (std::int64_t a = -m; a <= m; ++a) {
    for (std::int64_t c = 0; c <= m; c += 2) {
      if ((a & 1) == 0 || static_cast<double>(a * a + c * c) > l2) continue;
      if (c == 0 && a < 0) continue;  // one representative of +-(a, 0)
      if (std::gcd(a, c) == 1) ++n;
    }
  }
  return n;
}

double empirical_exponent(const CountSeries& series, double lo, double hi) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.thresholds.size(); ++i) {
    const double t = series.thresholds[i];
    if (t < lo || t > hi || series.counts[i] < 2) continue;
    xs.push_back(series.kind == SeriesKind::Orbital ? t : 2.0 * std::log(t));
    ys.push_back(std::log(static_cast<double>(series.counts[i])));
  }
  if (xs.size() < 3) throw InsufficientData("need at least 3 points with count >= 2 in the window");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw InsufficientData("window points share a single abscissa");
  return sxy / sxx;
}

namespace {

double c_hat_at(const Subgroup& subgroup, const std::vector<double>& lengths, int depth) {
  const CountSeries cyl = cylinder_series(subgroup, lengths, depth);
  std::vector<double> disp;
  enumerate_word_ball(subgroup.sigma, depth, std::nullopt, [&](const WordBallVisit& v) {
    if (subgroup.accepts_image(v.rho_image)) disp.push_back(displacement(v.element));
  });
  std::sort(disp.begin(), disp.end());
  double c_hat = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::uint64_t needed = cyl.counts[i];
    if (needed == 0) continue;
    if (needed > disp.size()) return std::numeric_limits<double>::infinity();
    // n(R) >= needed first holds at R = disp[needed - 1].
    c_hat = std::max(c_hat, disp[needed - 1] - 2.0 * std::log(lengths[i]));
  }
  return c_hat;
}

}  // namespace

CountingInequalityReport counting_inequality_check(const Subgroup& subgroup,
                                                   const std::vector<double>& lengths, int depth) {
  if (depth < 2) throw InvalidArgument("depth must be at least 2");
  CountingInequalityReport report;
  report.c_hat = c_hat_at(subgroup, lengths, depth);
  report.c_hat_shallow = c_hat_at(subgroup, lengths, depth - 2);
  report.pass = std::isfinite(report.c_hat) && std::isfinite(report.c_hat_shallow) &&
                std::abs(report.c_hat - report.c_hat_shallow) <=
                    CountingInequalityReport::kStableTolerance;
  return report;
}

void CountSeries::write_csv(std::ostream& os) const {
  os << "threshold,count,exact_flag,depth\n";
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    os << thresholds[i] << ',' << counts[i] << ',' << (exact[i] ? 1 : 0) << ',';
    if (!exact[i] && bfs_depth) os << *bfs_depth;
    os << '\n';
  }
}

}  // namespace windtree
