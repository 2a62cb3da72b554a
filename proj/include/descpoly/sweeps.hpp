#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "descpoly/analysis.hpp"
#include "descpoly/report.hpp"
#include "descpoly/roots.hpp"

namespace descpoly {

/// Runs fn(0..count-1) on a bounded worker pool.  Callers keep per-index
/// result slots, so the reduce order is deterministic regardless of the
/// worker count.  The first worker exception is rethrown.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& fn);

struct VerifyOptions {
  int max_m = 9;
  std::vector<std::string> checks;  // empty = all
  double tolerance = 1e-6;
  unsigned workers = 1;
};

/// Known check names: oracle, cnonneg, logconcave, identity, boundary,
/// ctilde, crec, regions.  Conjecture verdicts are attached as
/// informational results and never fail the report.
Report run_verify(const VerifyOptions& options);

std::vector<std::string> all_check_names();

// ---- root sweep + emitters --------------------------------------------

struct RootRow {
  std::string set;
  int m = 0;
  double re = 0, im = 0, radius = 0;
};

/// Roots of d(I,.) for every nonempty I with max <= max_m; rows ordered by
/// set encoding, then by argument.
std::vector<RootRow> root_sweep(int max_m, unsigned workers);

void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows);
std::vector<RootRow> read_roots_csv(std::istream& in);

/// Scatter plot with the three overlay circles per maximum: |z| <= m,
/// |m - z| <= m+1 and the conjectured disk around (m-1)/2.
void write_roots_svg(std::ostream& out, const std::vector<RootRow>& rows,
                     std::optional<int> m_filter);

/// 12 significant digits, the output rounding policy everywhere.
std::string format_sig(double x);

// ---- threshold table ----------------------------------------------------

struct Table1Row {
  std::string t_label;
  std::string gap_bound;
  std::string small_threshold;
  std::string big_threshold;
  std::string headroom_threshold;
};

/// The reproduced threshold table plus the exceptional-set census.
struct Table1 {
  std::vector<Table1Row> rows;
  CensusResult census;
};

Table1 make_table1(const CensusParams& params);

}  // namespace descpoly
