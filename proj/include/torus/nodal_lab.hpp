#pragma once

// Nodal domains of sampled torus eigenfunctions.
//
// An eigenfunction of norm s is sampled at the cell centres of an N x N grid
// on [0,1)^2. Cells whose value is within a relative tolerance of zero stand
// in for the nodal set; the remaining cells are grouped into same-sign
// 4-connected components, with wraparound in both axes on the torus.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "torus/special_functions.hpp"
#include "torus/spectrum.hpp"

namespace torus {

/// One real mode c cos(2 pi (m x + n y)) + d sin(2 pi (m x + n y)).
struct Term {
  std::int64_t m = 0;
  std::int64_t n = 0;
  double cos_coeff = 0;
  double sin_coeff = 0;
};

/// Frequency vectors of norm s, one per pair {v, -v}: the representative has
/// m > 0, or m == 0 and n > 0; s == 0 yields the single vector (0, 0).
/// Sorted by m descending, then n descending.
inline std::vector<LatticeIndex> half_plane_vectors(std::int64_t s) {
  std::vector<LatticeIndex> out;
  if (s < 0) return out;
  if (s == 0) return {{0, 0}};
  for (std::int64_t m = isqrt(s); m >= 0; --m) {
    const std::int64_t r = s - m * m;
    const std::int64_t n = isqrt(r);
    if (n * n != r) continue;
    if (m > 0) {
      out.push_back({m, n});
      if (n > 0) out.push_back({m, -n});
    } else {
      out.push_back({0, n});
    }
  }
  return out;
}

/// Real dimension of the eigenspace of norm s (two functions per half-plane
/// vector, one for the constant).
inline std::int64_t eigenspace_dimension(std::int64_t s) {
  if (s == 0) return 1;
  return 2 * static_cast<std::int64_t>(half_plane_vectors(s).size());
}

/// Finite trigonometric sum inside a single eigenspace.
class Eigenfunction {
public:
  /// Throws std::invalid_argument unless every term has m^2 + n^2 == s and
  /// some coefficient is non-zero.
  static Eigenfunction make(std::int64_t s, std::vector<Term> terms) {
    if (s < 0) throw std::invalid_argument("Eigenfunction: s must be non-negative");
    if (terms.empty()) throw std::invalid_argument("Eigenfunction: no terms");
    bool nonzero = false;
    for (const Term& t : terms) {
      if (t.m * t.m + t.n * t.n != s)
        throw std::invalid_argument("Eigenfunction: term (" + std::to_string(t.m) + "," + std::to_string(t.n) +
                                    ") does not have norm " + std::to_string(s));
      if (!std::isfinite(t.cos_coeff) || !std::isfinite(t.sin_coeff))
        throw std::invalid_argument("Eigenfunction: non-finite coefficient");
      // sin(0) vanishes, so only the cosine coefficient of (0,0) counts
      if (t.cos_coeff != 0 || (t.sin_coeff != 0 && (t.m != 0 || t.n != 0))) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("Eigenfunction: all coefficients are zero");
    return Eigenfunction(s, std::move(terms));
  }

  static Eigenfunction constant(double c = 1.0) { return make(0, {{0, 0, c, 0}}); }

  /// sin(2 pi (m x + n y)).
  static Eigenfunction sine_mode(std::int64_t m, std::int64_t n) { return make(m * m + n * n, {{m, n, 0, 1}}); }

  /// cos(2 pi (m x + n y)).
  static Eigenfunction cosine_mode(std::int64_t m, std::int64_t n) { return make(m * m + n * n, {{m, n, 1, 0}}); }

  std::int64_t s() const { return s_; }
  const std::vector<Term>& terms() const { return terms_; }
  double eigenvalue() const { return kFourPiSquared * static_cast<double>(s_); }

  double operator()(double x, double y) const {
    double u = 0;
    for (const Term& t : terms_) {
      const double phase = 2.0 * std::numbers::pi * (static_cast<double>(t.m) * x + static_cast<double>(t.n) * y);
      u += t.cos_coeff * std::cos(phase) + t.sin_coeff * std::sin(phase);
    }
    return u;
  }

private:
  Eigenfunction(std::int64_t s, std::vector<Term> terms) : s_(s), terms_(std::move(terms)) {}
  std::int64_t s_;
  std::vector<Term> terms_;
};

inline double evaluate(const Eigenfunction& u, double x, double y) { return u(x, y); }

/// Uniform draw in [-1, 1) from the top 53 bits of a 64-bit engine output.
inline double unit_interval_draw(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

/// Coefficients drawn uniformly from [-1, 1) over the full real basis of the
/// eigenspace of norm s; identical for identical (s, seed).
inline Eigenfunction random_eigenfunction(std::int64_t s, std::uint64_t seed) {
  if (!is_sum_of_two_squares(s))
    throw std::invalid_argument("random_eigenfunction: " + std::to_string(s) + " is not a sum of two squares");
  std::mt19937_64 rng(seed);
  std::vector<Term> terms;
  for (const LatticeIndex& v : half_plane_vectors(s)) {
    Term t{v.m, v.n, 0, 0};
    t.cos_coeff = unit_interval_draw(rng);
    if (s != 0) t.sin_coeff = unit_interval_draw(rng);
    terms.push_back(t);
  }
  return Eigenfunction::make(s, std::move(terms));
}

// ---------------------------------------------------------------------------
// Grid sampling and connected components

enum class Topology { Torus, Square };

/// Row-major sign samples: entry (row j, column i) is the sign of u at
/// ((i + 1/2)/N, (j + 1/2)/N), with 0 marking a zero cell.
struct SignGrid {
  int size = 0;
  std::vector<std::int8_t> signs;

  std::int8_t at(int row, int col) const { return signs[static_cast<std::size_t>(row) * size + col]; }
};

/// Throws std::invalid_argument when the relative tolerance zeroes every cell.
inline SignGrid sample_signs(const Eigenfunction& u, int grid_size, double zero_tol) {
  if (grid_size < 1) throw std::invalid_argument("sample_signs: grid size must be positive");
  if (!(zero_tol > 0)) throw std::invalid_argument("sample_signs: zero tolerance must be positive");
  const auto n = static_cast<std::size_t>(grid_size);

  // cos(a + b) and sin(a + b) from per-axis tables
  std::vector<double> values(n * n, 0.0);
  std::vector<double> cx(n), sx(n), cy(n), sy(n);
  for (const Term& t : u.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      const double c = (static_cast<double>(i) + 0.5) / grid_size;
      const double ax = 2.0 * std::numbers::pi * static_cast<double>(t.m) * c;
      const double ay = 2.0 * std::numbers::pi * static_cast<double>(t.n) * c;
      cx[i] = std::cos(ax);
      sx[i] = std::sin(ax);
      cy[i] = std::cos(ay);
      sy[i] = std::sin(ay);
    }
    for (std::size_t j = 0; j < n; ++j) {
      double* row = &values[j * n];
      for (std::size_t i = 0; i < n; ++i) {
        const double cos_sum = cx[i] * cy[j] - sx[i] * sy[j];
        const double sin_sum = sx[i] * cy[j] + cx[i] * sy[j];
        row[i] += t.cos_coeff * cos_sum + t.sin_coeff * sin_sum;
      }
    }
  }

  double peak = 0;
  for (double v : values) peak = std::max(peak, std::fabs(v));
  const double threshold = zero_tol * peak;

  SignGrid grid{grid_size, std::vector<std::int8_t>(n * n, 0)};
  bool any = false;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::fabs(values[k]) <= threshold) continue;
    grid.signs[k] = values[k] > 0 ? 1 : -1;
    any = true;
  }
  if (!any) throw std::invalid_argument("sample_signs: every cell is a zero cell (degenerate tolerance)");
  return grid;
}

/// Disjoint sets with path halving and union by size.
class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

struct NodalDomain {
  std::int64_t id = 0;
  int sign = 0;
  std::int64_t cell_count = 0;
  double area = 0;
  /// Cell edges separating the domain from any cell outside it.
  std::int64_t boundary_edge_count = 0;
  /// boundary_edge_count / N, a taxicab length bounding the true one from above.
  double perimeter_estimate = 0;
};

struct NodalDecomposition {
  int grid_size = 0;
  std::int64_t mu = 0;
  std::vector<NodalDomain> domains;
  std::int64_t zero_cell_count = 0;
  Topology topology = Topology::Torus;
  SignGrid signs;
  /// Row-major domain id per cell, -1 for zero cells.
  std::vector<std::int64_t> labels;
};

/// Same-sign 4-connected components of a sign grid. Domain ids follow the
/// row-major order of each domain's first cell.
inline NodalDecomposition decompose(const SignGrid& grid, Topology topology = Topology::Torus) {
  const int n = grid.size;
  const auto cells = static_cast<std::size_t>(n) * n;
  auto index = [n](int row, int col) { return static_cast<std::size_t>(row) * n + col; };

  UnionFind sets(cells);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const std::int8_t s = grid.at(row, col);
      if (s == 0) continue;
      const bool wrap = topology == Topology::Torus;
      if (col + 1 < n || wrap) {
        const int c2 = (col + 1) % n;
        if (grid.at(row, c2) == s) sets.unite(index(row, col), index(row, c2));
      }
      if (row + 1 < n || wrap) {
        const int r2 = (row + 1) % n;
        if (grid.at(r2, col) == s) sets.unite(index(row, col), index(r2, col));
      }
    }
  }

  NodalDecomposition dec;
  dec.grid_size = n;
  dec.topology = topology;
  dec.signs = grid;
  dec.labels.assign(cells, -1);
  std::vector<std::int64_t> label(cells, -1);
  const double cell_area = 1.0 / (static_cast<double>(n) * n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const std::size_t k = index(row, col);
      const std::int8_t s = grid.signs[k];
      if (s == 0) {
        ++dec.zero_cell_count;
        continue;
      }
      const std::size_t root = sets.find(k);
      if (label[root] < 0) {
        label[root] = static_cast<std::int64_t>(dec.domains.size());
        dec.domains.push_back({label[root], s, 0, 0, 0, 0});
      }
      dec.labels[k] = label[root];
      NodalDomain& d = dec.domains[static_cast<std::size_t>(label[root])];
      ++d.cell_count;
      const int neighbours[4][2] = {{row, col - 1}, {row, col + 1}, {row - 1, col}, {row + 1, col}};
      for (const auto& nb : neighbours) {
        int r = nb[0], c = nb[1];
        if (r < 0 || r >= n || c < 0 || c >= n) {
          if (topology == Topology::Square) continue;
          r = (r + n) % n;
          c = (c + n) % n;
        }
        if (sets.find(index(r, c)) != root) ++d.boundary_edge_count;
      }
    }
  }
  for (NodalDomain& d : dec.domains) {
    d.area = static_cast<double>(d.cell_count) * cell_area;
    d.perimeter_estimate = static_cast<double>(d.boundary_edge_count) / n;
  }
  dec.mu = static_cast<std::int64_t>(dec.domains.size());
  return dec;
}

/// Raised when the domain count changes between N and 2N.
class RefinementError : public std::runtime_error {
public:
  RefinementError(int grid_size, std::int64_t mu_coarse, std::int64_t mu_fine)
      : std::runtime_error("nodal domain count not stable under refinement: mu=" + std::to_string(mu_coarse) +
                           " at N=" + std::to_string(grid_size) + ", mu=" + std::to_string(mu_fine) +
                           " at N=" + std::to_string(2 * grid_size) + "; refine the grid"),
        grid_size_(grid_size), mu_coarse_(mu_coarse), mu_fine_(mu_fine) {}

  int grid_size() const { return grid_size_; }
  std::int64_t mu_coarse() const { return mu_coarse_; }
  std::int64_t mu_fine() const { return mu_fine_; }

private:
  int grid_size_;
  std::int64_t mu_coarse_;
  std::int64_t mu_fine_;
};

inline constexpr int kDefaultGridSize = 256;
inline constexpr int kMinGridSize = 16;
inline constexpr double kDefaultZeroTol = 1e-9;
inline constexpr double kDefaultGeoTol = 0.05;

/// Decomposition at a single resolution.
inline NodalDecomposition decompose_at(const Eigenfunction& u, int grid_size, double zero_tol,
                                       Topology topology = Topology::Torus) {
  if (grid_size < kMinGridSize) throw std::invalid_argument("grid size must be at least 16");
  return decompose(sample_signs(u, grid_size, zero_tol), topology);
}

/// Nodal decomposition at N, verified against the count at 2N.
inline NodalDecomposition count_nodal_domains(const Eigenfunction& u, int grid_size = kDefaultGridSize,
                                              double zero_tol = kDefaultZeroTol,
                                              Topology topology = Topology::Torus) {
  NodalDecomposition coarse = decompose_at(u, grid_size, zero_tol, topology);
  const NodalDecomposition fine = decompose_at(u, 2 * grid_size, zero_tol, topology);
  if (coarse.mu != fine.mu) throw RefinementError(grid_size, coarse.mu, fine.mu);
  return coarse;
}

/// count_nodal_domains, doubling N while the count is unstable, up to max_grid_size.
inline NodalDecomposition count_nodal_domains_refining(const Eigenfunction& u, int grid_size, double zero_tol,
                                                       int max_grid_size) {
  for (;;) {
    try {
      return count_nodal_domains(u, grid_size, zero_tol);
    } catch (const RefinementError&) {
      if (2 * grid_size > max_grid_size) throw;
      grid_size *= 2;
    }
  }
}

// ---------------------------------------------------------------------------
// Checks

struct CourantCheck {
  std::int64_t mu = 0;
  std::int64_t nu = 0;
  std::int64_t last_index = 0;
  /// mu <= last index of the eigenvalue: Courant's bound at its weakest index.
  bool satisfied = false;
  bool courant_sharp = false;
};

inline CourantCheck check_courant(const NodalDecomposition& dec, std::int64_t s, const SpectrumTable& table) {
  const EigenvalueClass* cls = table.find(s);
  if (cls == nullptr)
    throw std::invalid_argument("check_courant: norm " + std::to_string(s) + " is not in the spectrum table");
  CourantCheck out;
  out.mu = dec.mu;
  out.nu = cls->first_index;
  out.last_index = cls->last_index;
  out.satisfied = out.mu <= out.last_index;
  out.courant_sharp = out.mu == out.nu;
  return out;
}

inline CourantCheck check_courant(const Eigenfunction& u, const SpectrumTable& table,
                                  int grid_size = kDefaultGridSize, double zero_tol = kDefaultZeroTol) {
  return check_courant(count_nodal_domains(u, grid_size, zero_tol), u.s(), table);
}

enum class GeoStatus { Pass, Fail, OutOfHypothesis };

inline const char* to_string(GeoStatus s) {
  switch (s) {
    case GeoStatus::Pass: return "pass";
    case GeoStatus::Fail: return "fail";
    case GeoStatus::OutOfHypothesis: return "out_of_hypothesis";
  }
  return "?";
}

/// Area below which both torus inequalities apply.
inline constexpr double kSmallAreaLimit = 1.0 / std::numbers::pi;

struct FaberKrahnRow {
  std::int64_t domain_id = 0;
  double area = 0;
  /// lambda * area, which equals lambda_1(domain) * area for a nodal domain.
  double product = 0;
  GeoStatus status = GeoStatus::OutOfHypothesis;
  bool passes() const { return status != GeoStatus::Fail; }
};

inline std::vector<FaberKrahnRow> check_faber_krahn(const NodalDecomposition& dec, double lam,
                                                    double geo_tol = kDefaultGeoTol) {
  const double bound = special::faber_krahn_constant() * (1.0 - geo_tol);
  std::vector<FaberKrahnRow> rows;
  rows.reserve(dec.domains.size());
  for (const NodalDomain& d : dec.domains) {
    FaberKrahnRow r{d.id, d.area, lam * d.area, GeoStatus::OutOfHypothesis};
    if (d.area <= kSmallAreaLimit) r.status = r.product >= bound ? GeoStatus::Pass : GeoStatus::Fail;
    rows.push_back(r);
  }
  return rows;
}

struct IsoperimetricRow {
  std::int64_t domain_id = 0;
  /// perimeter_estimate^2
  double lhs = 0;
  /// 4 pi area
  double rhs = 0;
  GeoStatus status = GeoStatus::OutOfHypothesis;
  bool passes() const { return status != GeoStatus::Fail; }
};

/// Screens l^2 >= 4 pi A with the taxicab perimeter. That length is an upper
/// bound for the true boundary length, so a pass is evidence only.
inline std::vector<IsoperimetricRow> check_isoperimetric(const NodalDecomposition& dec,
                                                         double geo_tol = kDefaultGeoTol) {
  std::vector<IsoperimetricRow> rows;
  rows.reserve(dec.domains.size());
  for (const NodalDomain& d : dec.domains) {
    IsoperimetricRow r{d.id, d.perimeter_estimate * d.perimeter_estimate, 4.0 * std::numbers::pi * d.area,
                       GeoStatus::OutOfHypothesis};
    if (d.area <= kSmallAreaLimit) r.status = r.lhs >= r.rhs * (1.0 - geo_tol) ? GeoStatus::Pass : GeoStatus::Fail;
    rows.push_back(r);
  }
  return rows;
}

template <typename Rows>
std::int64_t count_status(const Rows& rows, GeoStatus status) {
  return std::count_if(rows.begin(), rows.end(), [status](const auto& r) { return r.status == status; });
}

/// Geometry screens with one refinement. A failure at N is re-examined at 2N
/// with geo_tol halved; only a failure at both resolutions is genuine.
struct GeometryScreen {
  std::vector<FaberKrahnRow> faber_krahn;
  std::vector<IsoperimetricRow> isoperimetric;
  bool refined = false;
  std::vector<FaberKrahnRow> faber_krahn_refined;
  std::vector<IsoperimetricRow> isoperimetric_refined;
  bool faber_krahn_genuine_failure = false;
  bool isoperimetric_genuine_failure = false;
};

inline GeometryScreen screen_geometry(const Eigenfunction& u, const NodalDecomposition& dec, double zero_tol,
                                      double geo_tol = kDefaultGeoTol) {
  GeometryScreen out;
  out.faber_krahn = check_faber_krahn(dec, u.eigenvalue(), geo_tol);
  out.isoperimetric = check_isoperimetric(dec, geo_tol);
  const bool fk_fail = count_status(out.faber_krahn, GeoStatus::Fail) > 0;
  const bool iso_fail = count_status(out.isoperimetric, GeoStatus::Fail) > 0;
  if (!fk_fail && !iso_fail) return out;

  out.refined = true;
  const NodalDecomposition fine = decompose_at(u, 2 * dec.grid_size, zero_tol, dec.topology);
  out.faber_krahn_refined = check_faber_krahn(fine, u.eigenvalue(), geo_tol / 2);
  out.isoperimetric_refined = check_isoperimetric(fine, geo_tol / 2);
  out.faber_krahn_genuine_failure = fk_fail && count_status(out.faber_krahn_refined, GeoStatus::Fail) > 0;
  out.isoperimetric_genuine_failure = iso_fail && count_status(out.isoperimetric_refined, GeoStatus::Fail) > 0;
  return out;
}

// ---------------------------------------------------------------------------
// Randomized sweep

struct SweepConfig {
  std::vector<std::int64_t> s_values{1, 2, 4, 5, 8, 9, 10, 13, 16, 17};
  std::uint64_t seeds = 100;
  std::uint64_t first_seed = 1;
  int grid_size = kDefaultGridSize;
  /// Largest N tried when the count at N and 2N disagree.
  int max_grid_size = 2048;
  double zero_tol = kDefaultZeroTol;
  double geo_tol = kDefaultGeoTol;
  unsigned threads = 0;
};

struct SweepSample {
  std::int64_t s = 0;
  std::uint64_t seed = 0;
  int grid_size = 0;
  CourantCheck courant;
  std::int64_t in_hypothesis_domains = 0;
  std::int64_t faber_krahn_first_pass_failures = 0;
  std::int64_t isoperimetric_first_pass_failures = 0;
  bool faber_krahn_genuine_failure = false;
  bool isoperimetric_genuine_failure = false;
  /// Smallest lambda * area / (pi j01^2) over in-hypothesis domains.
  std::optional<double> min_faber_krahn_ratio;
  std::optional<std::string> error;
};

struct SweepResult {
  std::vector<SweepSample> samples;
  std::int64_t courant_violations = 0;
  /// Samples with mu == nu on a class with nu >= 4.
  std::int64_t sharp_hits_nu_ge_4 = 0;
  std::int64_t refinements = 0;
  std::int64_t in_hypothesis_domains = 0;
  std::int64_t faber_krahn_genuine_failures = 0;
  std::int64_t isoperimetric_genuine_failures = 0;
  std::int64_t errors = 0;
};

inline SweepSample run_sweep_sample(std::int64_t s, std::uint64_t seed, const SweepConfig& cfg,
                                    const SpectrumTable& table) {
  SweepSample out;
  out.s = s;
  out.seed = seed;
  try {
    const Eigenfunction u = random_eigenfunction(s, seed);
    const NodalDecomposition dec =
        count_nodal_domains_refining(u, cfg.grid_size, cfg.zero_tol, cfg.max_grid_size);
    out.grid_size = dec.grid_size;
    out.courant = check_courant(dec, s, table);
    const GeometryScreen screen = screen_geometry(u, dec, cfg.zero_tol, cfg.geo_tol);
    for (const FaberKrahnRow& r : screen.faber_krahn) {
      if (r.status == GeoStatus::OutOfHypothesis) continue;
      ++out.in_hypothesis_domains;
      const double ratio = r.product / special::faber_krahn_constant();
      out.min_faber_krahn_ratio = std::min(out.min_faber_krahn_ratio.value_or(ratio), ratio);
    }
    out.faber_krahn_first_pass_failures = count_status(screen.faber_krahn, GeoStatus::Fail);
    out.isoperimetric_first_pass_failures = count_status(screen.isoperimetric, GeoStatus::Fail);
    out.faber_krahn_genuine_failure = screen.faber_krahn_genuine_failure;
    out.isoperimetric_genuine_failure = screen.isoperimetric_genuine_failure;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

/// Samples are distributed over worker threads and merged in (s, seed) order.
inline SweepResult run_sweep(const SweepConfig& cfg, const SpectrumTable& table) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> jobs;
  for (std::int64_t s : cfg.s_values)
    for (std::uint64_t i = 0; i < cfg.seeds; ++i) jobs.emplace_back(s, cfg.first_seed + i);

  SweepResult result;
  result.samples.resize(jobs.size());
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < jobs.size(); j += workers)
          result.samples[j] = run_sweep_sample(jobs[j].first, jobs[j].second, cfg, table);
      });
    }
  }

  for (const SweepSample& smp : result.samples) {
    if (smp.error) {
      ++result.errors;
      continue;
    }
    if (!smp.courant.satisfied) ++result.courant_violations;
    if (smp.courant.courant_sharp && smp.courant.nu >= 4) ++result.sharp_hits_nu_ge_4;
    if (smp.grid_size != cfg.grid_size) ++result.refinements;
    result.in_hypothesis_domains += smp.in_hypothesis_domains;
    if (smp.faber_krahn_genuine_failure) ++result.faber_krahn_genuine_failures;
    if (smp.isoperimetric_genuine_failure) ++result.isoperimetric_genuine_failures;
  }
  return result;
}

} // namespace torus
