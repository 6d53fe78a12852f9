#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "wmort/data_model.hpp"

namespace wmort {

// January-1 population counts; must extend one year past the panel so the
// within-year interpolation covers the final year.
struct AnnualPopulation {
  std::vector<std::string> ages;
  std::vector<std::string> regions;
  int year_min = 0;
  int year_max = 0;  // inclusive; needs panel year_max + 1
  std::vector<double> p;  // [age][year][region]

  double& at(int x, int t, int r) {
    return p[(static_cast<std::size_t>(x) * (year_max - year_min + 1) + t) * regions.size() + r];
  }
  double at(int x, int t, int r) const {
    return p[(static_cast<std::size_t>(x) * (year_max - year_min + 1) + t) * regions.size() + r];
  }
};

// daily gridded temperatures with population weights per cell
struct GriddedDaily {
  struct Cell {
    std::string id;
    std::string region;
    double weight = 0.0;
  };
  std::vector<Cell> cells;
  long day_first = 0;  // serial day of the first value
  long day_last = 0;
  std::vector<std::vector<double>> values;  // [cell][day]
};

// Weekly person-year exposures from annual counts: linear interpolation of
// the population to each ISO week start, then the midpoint of consecutive
// weeks divided by the 52.18 average weeks per year. ISO week 53, where it
// exists, is folded into week 52 by summation.
Tensor4 interpolate_exposure(const AnnualPopulation& pop, const PanelIndex& index);

// Population-weighted spatial mean per region and day, then the plain mean
// over the 7 days of each ISO week; week 53 is averaged into week 52.
Tensor3 aggregate_temperature(const GriddedDaily& grid, const PanelIndex& index);

// Exceedance over the region- and week-specific 90th percentile (type-7,
// taken across the panel years), floored at zero.
Tensor3 ili_anomaly(const Tensor3& ili);
// the percentile surface itself, needed to transform forecasted incidence
Eigen::MatrixXd ili_q90(const Tensor3& ili);  // 52 x regions

struct CsvPaths {
  std::string deaths;
  std::string population;
  std::string temperature_grid;
  std::string ili;
  std::string adjacency;
};

struct IngestResult {
  MortalityPanel panel;
  CovariatePanel covariates;
  RegionGraph graph;
  AnnualPopulation population;
  std::vector<std::string> notes;  // imputed cells, folded weeks, ...
};

// Builds the validated in-memory objects from the five CSV schemas.
// Strata absent from the death file count as zero deaths (noted);
// duplicate keys and schema violations throw with file/line context.
IngestResult load_csv_inputs(const CsvPaths& paths, const PanelIndex& index);

}  // namespace wmort
