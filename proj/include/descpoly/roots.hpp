#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "descpoly/descent_set.hpp"
#include "descpoly/exact_poly.hpp"

namespace descpoly {

/// Roots with a posteriori inclusion radii.  When the disks are pairwise
/// disjoint each contains exactly one zero; otherwise `clustered` is set
/// and the disks are only a collective cover.
struct RootSet {
  int degree = 0;
  std::vector<std::complex<double>> roots;  // sorted by argument, then modulus
  std::vector<double> radii;
  bool clustered = false;
  int precision_digits = 16;  // working precision of the accepted pass
  int iterations = 0;
};

/// All complex roots by simultaneous (Ehrlich-Aberth) iteration from a
/// deterministic circle of initial guesses, with per-root radii
///   r_i = deg * |p(z_i)| / (|lead| * prod_{j != i} |z_i - z_j|)
/// where |p(z_i)| is evaluated exactly on the cleared integer coefficients.
/// Escalates the working precision (up to two steps beyond the request)
/// when the disks overlap, before flagging the set clustered.
RootSet find_roots(const ExactPoly& p, int precision_digits = 16);

/// Zero-free test regions.
struct Region {
  enum class Kind { Disk, RmShifted, HalfPlaneReGE };
  Kind kind;
  std::complex<double> center{};  // Disk
  double radius = 0;              // Disk
  int m = 0;                      // RmShifted
  double bound = 0;               // HalfPlaneReGE

  static Region disk(std::complex<double> center, double radius);
  static Region rm_shifted(int m);
  static Region half_plane_re_ge(double bound);
};

struct Membership {
  bool inside = false;
  bool boundary = false;  // argument branch point hit exactly
  double margin = 0;      // signed distance-style margin, negative outside
};

/// Membership in the argument-sum region S_m united with its conjugate:
/// principal arguments, sum over arg(z - i + 1) for i = 1..m below pi.
/// The margin is the euclidean lower bound (pi - sum) / sum(1/|z-i+1|).
Membership in_Rm(std::complex<double> z, int m);

Membership in_region(std::complex<double> z, const Region& r);

/// Per-root verdicts for every published root bound plus the open disk.
struct RegionReport {
  std::string set;
  int m = 0;
  bool gap_case = false;        // |I| = 1 or last gap >= 2
  bool clustered = false;
  bool theorem_ok = true;       // |z| <= m, |m-z| <= m+1, Re z >= -1,
                                // shifted-region exclusion, gap disk if applicable
  bool conjecture_ok = true;    // |z - (m-1)/2| <= (m+1)/2, reported only
  std::vector<std::string> violations;
  std::vector<std::string> conjecture_violations;
  RootSet roots;
};

RegionReport check_root_regions(const DescentSet& I, double tolerance = 1e-6);

/// Root clustering of the extended sets I^t around integer targets.
struct ClusterRow {
  int t = 0;
  int degree = 0;
  bool all_targets = false;      // every target in {-1..m+t}\{m-1} holds exactly one root
  bool targets_sans_minus_one = false;  // same with -1 dropped
  bool roots_real = false;       // every |Im| within tolerance + radius
  bool roots_in_interval = false;  // every Re in [-1, m+t] within tolerance + radius
  double max_im = 0;
  std::vector<int> unmatched_targets;
};

struct ClusterReport {
  std::string set;
  int t_max = 0;
  double tolerance = 0;
  std::vector<ClusterRow> rows;
  // The full target list always has one more entry than the polynomial has
  // roots (the -1 endpoint), so `first_all` records a check that cannot
  // succeed; `first_sans_minus_one` is the effective clustering onset.
  std::optional<int> first_all;
  std::optional<int> first_sans_minus_one;
  bool persists = false;  // sans-minus-one clustering holds from onset to t_max
};

ClusterReport real_root_clustering(const DescentSet& I, int t_max, double tolerance = 1e-6);

}  // namespace descpoly
