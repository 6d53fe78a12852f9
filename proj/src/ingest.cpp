#include "wmort/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "wmort/calendar.hpp"
#include "wmort/csv.hpp"
#include "wmort/stats.hpp"

namespace wmort {

namespace {
constexpr double kAvgWeeksPerYear = 52.18;
const double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

Tensor4 interpolate_exposure(const AnnualPopulation& pop, const PanelIndex& index) {
  if (pop.year_min > index.year_min || pop.year_max < index.year_max + 1)
    throw std::invalid_argument("interpolate_exposure: population must cover years " +
                                std::to_string(index.year_min) + ".." +
                                std::to_string(index.year_max + 1));
  if (pop.ages != index.ages || pop.regions != index.regions)
    throw std::invalid_argument("interpolate_exposure: population index mismatch");

  const int nx = index.n_ages(), nr = index.n_regions();

  // population interpolated to the start of ISO week w of iso-year y
  auto ptilde = [&](int x, int y, int w, int r) -> double {
    const int t = y - pop.year_min;
    if (y >= pop.year_max) return pop.at(x, pop.year_max - pop.year_min, r);
    const long jan1 = cal::days_from_civil(y, 1, 1);
    const long jan1_next = cal::days_from_civil(y + 1, 1, 1);
    const double frac = static_cast<double>(cal::iso_week_start(y, w) - jan1) /
                        static_cast<double>(jan1_next - jan1);
    const double p0 = pop.at(x, t, r), p1 = pop.at(x, t + 1, r);
    return p0 + frac * (p1 - p0);
  };

  Tensor4 exposure(nx, index.n_years(), nr);
  for (int x = 0; x < nx; ++x)
    for (int ti = 0; ti < index.n_years(); ++ti) {
      const int year = index.year_min + ti;
      const int weeks = cal::iso_weeks_in_year(year);
      for (int r = 0; r < nr; ++r) {
        for (int w = 1; w <= weeks; ++w) {
          const double cur = ptilde(x, year, w, r);
          const double nxt = w < weeks ? ptilde(x, year, w + 1, r) : ptilde(x, year + 1, 1, r);
          const double e = (cur + nxt) / (2.0 * kAvgWeeksPerYear);
          const int wi = std::min(w, kWeeksPerYear) - 1;  // week 53 folds into 52
          exposure(x, ti, wi, r) += e;
        }
      }
    }
  return exposure;
}

Tensor3 aggregate_temperature(const GriddedDaily& grid, const PanelIndex& index) {
  const int nr = index.n_regions();
  std::vector<double> wsum(nr, 0.0);
  std::vector<std::vector<int>> cells_of(nr);
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    const int r = index.region_of(grid.cells[c].region);
    if (grid.cells[c].weight < 0.0)
      throw std::invalid_argument("aggregate_temperature: negative weight for cell " + grid.cells[c].id);
    wsum[r] += grid.cells[c].weight;
    cells_of[r].push_back(static_cast<int>(c));
  }
  for (int r = 0; r < nr; ++r)
    if (!(wsum[r] > 0.0))
      throw std::invalid_argument("aggregate_temperature: region " + index.regions[r] +
                                  " has no cell with positive weight");

  auto daily_mean = [&](int r, long day) -> double {
    const long off = day - grid.day_first;
    if (off < 0 || day > grid.day_last)
      throw std::invalid_argument("aggregate_temperature: missing day " + std::to_string(day));
    double acc = 0.0;
    for (int c : cells_of[r]) {
      const double v = grid.values[c][static_cast<std::size_t>(off)];
      if (std::isnan(v))
        throw std::invalid_argument("aggregate_temperature: missing value for cell " +
                                    grid.cells[c].id + " at day offset " + std::to_string(off));
      acc += grid.cells[c].weight * v;
    }
    return acc / wsum[r];
  };

  Tensor3 tavg(index.n_years(), nr);
  for (int ti = 0; ti < index.n_years(); ++ti) {
    const int year = index.year_min + ti;
    const int weeks = cal::iso_weeks_in_year(year);
    for (int r = 0; r < nr; ++r) {
      double week52 = 0.0, week53 = 0.0;
      bool has53 = false;
      for (int w = 1; w <= weeks; ++w) {
        const long start = cal::iso_week_start(year, w);
        double acc = 0.0;
        for (int d = 0; d < 7; ++d) acc += daily_mean(r, start + d);
        const double mean = acc / 7.0;
        if (w < kWeeksPerYear) {
          tavg(ti, w - 1, r) = mean;
        } else if (w == kWeeksPerYear) {
          week52 = mean;
        } else {
          week53 = mean;
          has53 = true;
        }
      }
      tavg(ti, kWeeksPerYear - 1, r) = has53 ? 0.5 * (week52 + week53) : week52;
    }
  }
  return tavg;
}

Eigen::MatrixXd ili_q90(const Tensor3& ili) {
  Eigen::MatrixXd q(kWeeksPerYear, ili.nr());
  std::vector<double> vals(static_cast<std::size_t>(ili.nt()));
  for (int w = 0; w < kWeeksPerYear; ++w)
    for (int r = 0; r < ili.nr(); ++r) {
      for (int t = 0; t < ili.nt(); ++t) vals[static_cast<std::size_t>(t)] = ili(t, w, r);
      std::sort(vals.begin(), vals.end());
      q(w, r) = quantile_type7_sorted(vals, 0.90);
    }
  return q;
}

Tensor3 ili_anomaly(const Tensor3& ili) {
  const Eigen::MatrixXd q = ili_q90(ili);
  Tensor3 out(ili.nt(), ili.nr());
  for (int t = 0; t < ili.nt(); ++t)
    for (int w = 0; w < kWeeksPerYear; ++w)
      for (int r = 0; r < ili.nr(); ++r) out(t, w, r) = std::max(ili(t, w, r) - q(w, r), 0.0);
  return out;
}

namespace {

struct Key {
  int x, t, w, r;
  bool operator<(const Key& o) const {
    return std::tie(x, t, w, r) < std::tie(o.x, o.t, o.w, o.r);
  }
};

}  // namespace

IngestResult load_csv_inputs(const CsvPaths& paths, const PanelIndex& index) {
  IngestResult res;
  res.panel.index = index;
  res.covariates.index = index;
  const int nx = index.n_ages(), nt = index.n_years(), nr = index.n_regions();

  // population: keep every year in the file that is >= year_min
  {
    std::map<int, bool> years_seen;
    csv::for_each_row(paths.population, {"region", "year", "age_group", "population"},
                      [&](const csv::Row& row) {
                        const int year = static_cast<int>(row.num("year"));
                        if (year >= index.year_min) years_seen[year] = true;
                      });
    if (years_seen.empty()) throw std::runtime_error(paths.population + ": no usable years");
    AnnualPopulation pop;
    pop.ages = index.ages;
    pop.regions = index.regions;
    pop.year_min = index.year_min;
    pop.year_max = years_seen.rbegin()->first;
    pop.p.assign(static_cast<std::size_t>(nx) * (pop.year_max - pop.year_min + 1) * nr, kNaN);
    csv::for_each_row(paths.population, {"region", "year", "age_group", "population"},
                      [&](const csv::Row& row) {
                        const int year = static_cast<int>(row.num("year"));
                        if (year < pop.year_min || year > pop.year_max) return;
                        const int x = index.age_of(row.get("age_group"));
                        const int r = index.region_of(row.get("region"));
                        double& slot = pop.at(x, year - pop.year_min, r);
                        if (!std::isnan(slot))
                          throw std::runtime_error(paths.population + " line " + std::to_string(row.line) +
                                                   ": duplicate (region,year,age) row");
                        const double v = row.num("population");
                        if (v < 0.0)
                          throw std::runtime_error(paths.population + " line " + std::to_string(row.line) +
                                                   ": negative population");
                        slot = v;
                      });
    for (int x = 0; x < nx; ++x)
      for (int t = 0; t <= pop.year_max - pop.year_min; ++t)
        for (int r = 0; r < nr; ++r)
          if (std::isnan(pop.at(x, t, r)))
            throw std::runtime_error(paths.population + ": missing population for (" +
                                     index.ages[x] + "," + std::to_string(pop.year_min + t) + "," +
                                     index.regions[r] + ")");
    res.population = std::move(pop);
  }

  res.panel.exposures = interpolate_exposure(res.population, index);

  // deaths: absent strata count as zero, duplicates are an error
  {
    res.panel.deaths = Tensor4(nx, nt, nr, 0.0);
    std::set<Key> seen;
    std::int64_t present = 0;
    csv::for_each_row(paths.deaths, {"region", "year", "isoweek", "age_group", "deaths"},
                      [&](const csv::Row& row) {
                        const int year = static_cast<int>(row.num("year"));
                        if (year < index.year_min || year > index.year_max) return;
                        const int w = static_cast<int>(row.num("isoweek"));
                        if (w < 1 || w > 53)
                          throw std::runtime_error(paths.deaths + " line " + std::to_string(row.line) +
                                                   ": isoweek out of 1..53");
                        const int x = index.age_of(row.get("age_group"));
                        const int r = index.region_of(row.get("region"));
                        const double d = row.num("deaths");
                        if (d < 0.0 || d != std::floor(d))
                          throw std::runtime_error(paths.deaths + " line " + std::to_string(row.line) +
                                                   ": deaths must be a nonnegative integer");
                        if (!seen.insert({x, year - index.year_min, w, r}).second)
                          throw std::runtime_error(paths.deaths + " line " + std::to_string(row.line) +
                                                   ": duplicate (region,year,isoweek,age) row");
                        const int wi = std::min(w, kWeeksPerYear) - 1;  // week 53 adds into 52
                        res.panel.deaths(x, year - index.year_min, wi, r) += d;
                        ++present;
                      });
    // count only weeks 1..52 when reporting implicit zeros
    std::int64_t expected = static_cast<std::int64_t>(nx) * nt * kWeeksPerYear * nr;
    std::int64_t missing = 0;
    for (int x = 0; x < nx; ++x)
      for (int t = 0; t < nt; ++t)
        for (int w = 1; w <= kWeeksPerYear; ++w)
          for (int r = 0; r < nr; ++r)
            if (!seen.count({x, t, w, r})) ++missing;
    if (missing > 0)
      res.notes.push_back("deaths: " + std::to_string(missing) + " of " + std::to_string(expected) +
                          " strata absent from file, imputed as zero deaths");
  }

  // temperature grid
  {
    long day_first = std::numeric_limits<long>::max(), day_last = std::numeric_limits<long>::min();
    for (int ti = 0; ti < nt; ++ti) {
      const int year = index.year_min + ti;
      day_first = std::min(day_first, cal::iso_week_start(year, 1));
      day_last = std::max(day_last,
                          cal::iso_week_start(year, cal::iso_weeks_in_year(year)) + 6);
    }
    GriddedDaily grid;
    grid.day_first = day_first;
    grid.day_last = day_last;
    std::unordered_map<std::string, int> cell_of;
    csv::for_each_row(paths.temperature_grid, {"cell_id", "region", "weight", "date", "tavg_c"},
                      [&](const csv::Row& row) {
                        const std::string id = row.get("cell_id");
                        auto it = cell_of.find(id);
                        int c;
                        if (it == cell_of.end()) {
                          c = static_cast<int>(grid.cells.size());
                          cell_of.emplace(id, c);
                          grid.cells.push_back({id, row.get("region"), row.num("weight")});
                          grid.values.emplace_back(static_cast<std::size_t>(day_last - day_first + 1), kNaN);
                        } else {
                          c = it->second;
                          if (grid.cells[c].weight != row.num("weight"))
                            throw std::runtime_error(paths.temperature_grid + " line " +
                                                     std::to_string(row.line) +
                                                     ": conflicting weight for cell " + id);
                        }
                        const long day = cal::days_from_civil(cal::parse_date(row.get("date")));
                        if (day < day_first || day > day_last) return;
                        grid.values[c][static_cast<std::size_t>(day - day_first)] = row.num("tavg_c");
                      });
    res.covariates.tavg = aggregate_temperature(grid, index);
  }

  // ili rates; week 53 averages into week 52
  {
    Tensor3 ili(nt, nr, kNaN);
    Tensor3 ili53(nt, nr, kNaN);  // only week-53 slot used
    csv::for_each_row(paths.ili, {"region", "year", "isoweek", "ili_rate"}, [&](const csv::Row& row) {
      const int year = static_cast<int>(row.num("year"));
      if (year < index.year_min || year > index.year_max) return;
      const int w = static_cast<int>(row.num("isoweek"));
      if (w < 1 || w > 53)
        throw std::runtime_error(paths.ili + " line " + std::to_string(row.line) + ": isoweek out of 1..53");
      const int r = index.region_of(row.get("region"));
      const double v = row.num("ili_rate");
      if (v < 0.0)
        throw std::runtime_error(paths.ili + " line " + std::to_string(row.line) + ": negative incidence");
      double& slot = w == 53 ? ili53(year - index.year_min, 0, r) : ili(year - index.year_min, w - 1, r);
      if (!std::isnan(slot))
        throw std::runtime_error(paths.ili + " line " + std::to_string(row.line) +
                                 ": duplicate (region,year,isoweek) row");
      slot = v;
    });
    for (int t = 0; t < nt; ++t)
      for (int r = 0; r < nr; ++r) {
        if (!std::isnan(ili53(t, 0, r)))
          ili(t, kWeeksPerYear - 1, r) = 0.5 * (ili(t, kWeeksPerYear - 1, r) + ili53(t, 0, r));
        for (int w = 0; w < kWeeksPerYear; ++w)
          if (std::isnan(ili(t, w, r)))
            throw std::runtime_error(paths.ili + ": missing incidence for (" + index.regions[r] + "," +
                                     std::to_string(index.year_min + t) + ",w" + std::to_string(w + 1) + ")");
      }
    res.covariates.ili = std::move(ili);
  }

  // adjacency
  {
    res.graph = RegionGraph::empty(index.regions);
    csv::for_each_row(paths.adjacency, {"region_a", "region_b"}, [&](const csv::Row& row) {
      const int a = index.region_of(row.get("region_a"));
      const int b = index.region_of(row.get("region_b"));
      if (a == b)
        throw std::runtime_error(paths.adjacency + " line " + std::to_string(row.line) + ": self-loop");
      res.graph.add_edge(a, b);
    });
  }

  return res;
}

}  // namespace wmort
