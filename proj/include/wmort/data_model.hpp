#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmort/tensor.hpp"

namespace wmort {

// Index sets shared by every module: ordered age-group labels, a contiguous
// year range, ISO weeks 1..52 and ordered region codes. Age labels are
// opaque; 5-year banding and week-53 folding are ingestion concerns.
struct PanelIndex {
  std::vector<std::string> ages;
  int year_min = 0;
  int year_max = 0;
  std::vector<std::string> regions;

  int n_ages() const { return static_cast<int>(ages.size()); }
  int n_years() const { return year_max - year_min + 1; }
  int n_regions() const { return static_cast<int>(regions.size()); }
  std::int64_t n_cells() const {
    return static_cast<std::int64_t>(n_ages()) * n_years() * kWeeksPerYear * n_regions();
  }
  int age_of(const std::string& label) const;
  int region_of(const std::string& code) const;

  bool operator==(const PanelIndex&) const = default;
};

// deaths and person-year exposures, dense over the full index grid
struct MortalityPanel {
  PanelIndex index;
  Tensor4 deaths;
  Tensor4 exposures;
};

// weekly regional covariates (age-free); ili holds raw incidence rates
struct CovariatePanel {
  PanelIndex index;  // ages unused
  Tensor3 tavg;
  Tensor3 ili;
};

// undirected region adjacency, symmetric with zero diagonal
struct RegionGraph {
  std::vector<std::string> regions;
  std::vector<std::vector<bool>> adjacency;

  static RegionGraph empty(const std::vector<std::string>& regions);
  void add_edge(int i, int j);
  int degree(int i) const;
};

struct ValidationIssue {
  std::string where;  // coordinates or pair involved
  std::string what;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Checks every structural invariant of the three containers; returns
// a report instead of throwing so the CLI can show all problems at once.
ValidationReport validate_panel(const MortalityPanel& panel, const CovariatePanel& covs,
                                const RegionGraph& graph);

// variance-to-mean ratio of weekly death counts per (age, region);
// strata with zero mean are flagged undefined
struct DispersionIndex {
  int n_ages = 0, n_regions = 0;
  std::vector<double> value;             // row-major (age, region)
  std::vector<bool> defined;
  double operator()(int x, int r) const { return value[static_cast<std::size_t>(x) * n_regions + r]; }
  bool is_defined(int x, int r) const { return defined[static_cast<std::size_t>(x) * n_regions + r]; }
};

DispersionIndex dispersion_index(const MortalityPanel& panel);

}  // namespace wmort
