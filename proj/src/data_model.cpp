#include "wmort/data_model.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wmort {

int PanelIndex::age_of(const std::string& label) const {
  for (int i = 0; i < n_ages(); ++i)
    if (ages[i] == label) return i;
  throw std::invalid_argument("unknown age group '" + label + "'");
}

int PanelIndex::region_of(const std::string& code) const {
  for (int i = 0; i < n_regions(); ++i)
    if (regions[i] == code) return i;
  throw std::invalid_argument("unknown region '" + code + "'");
}

RegionGraph RegionGraph::empty(const std::vector<std::string>& regions) {
  RegionGraph g;
  g.regions = regions;
  g.adjacency.assign(regions.size(), std::vector<bool>(regions.size(), false));
  return g;
}

void RegionGraph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("RegionGraph: self-loop");
  adjacency[i][j] = true;
  adjacency[j][i] = true;
}

int RegionGraph::degree(int i) const {
  int d = 0;
  for (std::size_t j = 0; j < adjacency[i].size(); ++j)
    if (adjacency[i][j]) ++d;
  return d;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& is : issues) os << is.where << ": " << is.what << "\n";
  return os.str();
}

ValidationReport validate_panel(const MortalityPanel& panel, const CovariatePanel& covs,
                                const RegionGraph& graph) {
  ValidationReport rep;
  const PanelIndex& ix = panel.index;
  auto cell = [&](int x, int t, int w, int r) {
    std::ostringstream os;
    os << "(" << ix.ages[x] << "," << (ix.year_min + t) << ",w" << (w + 1) << "," << ix.regions[r] << ")";
    return os.str();
  };

  if (ix.ages.empty()) rep.issues.push_back({"index", "age list is empty"});
  for (int i = 1; i < ix.n_ages(); ++i)
    if (!(ix.ages[i - 1] < ix.ages[i]))
      rep.issues.push_back({"index", "age labels not strictly ordered at '" + ix.ages[i] + "'"});
  if (ix.year_max < ix.year_min) rep.issues.push_back({"index", "empty year range"});
  {
    std::set<std::string> seen;
    for (const auto& r : ix.regions)
      if (!seen.insert(r).second) rep.issues.push_back({"index", "duplicate region code '" + r + "'"});
  }

  if (panel.deaths.nx() != ix.n_ages() || panel.deaths.nt() != ix.n_years() ||
      panel.deaths.nr() != ix.n_regions())
    rep.issues.push_back({"deaths", "tensor dimensions do not match index"});
  if (panel.exposures.nx() != ix.n_ages() || panel.exposures.nt() != ix.n_years() ||
      panel.exposures.nr() != ix.n_regions())
    rep.issues.push_back({"exposures", "tensor dimensions do not match index"});
  if (!rep.ok()) return rep;

  for (int x = 0; x < ix.n_ages(); ++x)
    for (int t = 0; t < ix.n_years(); ++t)
      for (int w = 0; w < kWeeksPerYear; ++w)
        for (int r = 0; r < ix.n_regions(); ++r) {
          const double d = panel.deaths(x, t, w, r);
          const double e = panel.exposures(x, t, w, r);
          if (!(d >= 0.0) || d != std::floor(d) || !std::isfinite(d))
            rep.issues.push_back({cell(x, t, w, r), "deaths must be a nonnegative integer"});
          if (!(e > 0.0) || !std::isfinite(e))
            rep.issues.push_back({cell(x, t, w, r), "exposure must be strictly positive"});
        }

  if (covs.tavg.nt() != ix.n_years() || covs.tavg.nr() != ix.n_regions() ||
      covs.ili.nt() != ix.n_years() || covs.ili.nr() != ix.n_regions()) {
    rep.issues.push_back({"covariates", "(year,week,region) grid does not match the mortality panel"});
  } else {
    for (int t = 0; t < ix.n_years(); ++t)
      for (int w = 0; w < kWeeksPerYear; ++w)
        for (int r = 0; r < ix.n_regions(); ++r) {
          if (!std::isfinite(covs.tavg(t, w, r)))
            rep.issues.push_back({"tavg(" + std::to_string(ix.year_min + t) + ",w" +
                                      std::to_string(w + 1) + "," + ix.regions[r] + ")",
                                  "non-finite temperature"});
          if (!(covs.ili(t, w, r) >= 0.0))
            rep.issues.push_back({"ili(" + std::to_string(ix.year_min + t) + ",w" +
                                      std::to_string(w + 1) + "," + ix.regions[r] + ")",
                                  "negative or non-finite incidence"});
        }
  }

  if (graph.regions != ix.regions)
    rep.issues.push_back({"graph", "region list does not match the panel index"});
  const int nr = static_cast<int>(graph.regions.size());
  if (static_cast<int>(graph.adjacency.size()) != nr)
    rep.issues.push_back({"graph", "adjacency matrix has wrong dimension"});
  else
    for (int i = 0; i < nr; ++i) {
      if (static_cast<int>(graph.adjacency[i].size()) != nr) {
        rep.issues.push_back({"graph", "adjacency row " + graph.regions[i] + " has wrong length"});
        continue;
      }
      if (graph.adjacency[i][i])
        rep.issues.push_back({"graph(" + graph.regions[i] + ")", "self-loop"});
      for (int j = i + 1; j < nr; ++j)
        if (graph.adjacency[i][j] != graph.adjacency[j][i])
          rep.issues.push_back({"graph(" + graph.regions[i] + "," + graph.regions[j] + ")",
                                "asymmetric adjacency entry"});
    }

  return rep;
}

DispersionIndex dispersion_index(const MortalityPanel& panel) {
  const PanelIndex& ix = panel.index;
  const std::int64_t n = static_cast<std::int64_t>(ix.n_years()) * kWeeksPerYear;
  if (n < 2) throw std::invalid_argument("dispersion_index: need at least two time points");
  DispersionIndex out;
  out.n_ages = ix.n_ages();
  out.n_regions = ix.n_regions();
  out.value.assign(static_cast<std::size_t>(out.n_ages) * out.n_regions, 0.0);
  out.defined.assign(out.value.size(), true);
  for (int x = 0; x < out.n_ages; ++x)
    for (int r = 0; r < out.n_regions; ++r) {
      double mean = 0.0;
      for (int t = 0; t < ix.n_years(); ++t)
        for (int w = 0; w < kWeeksPerYear; ++w) mean += panel.deaths(x, t, w, r);
      mean /= static_cast<double>(n);
      const std::size_t k = static_cast<std::size_t>(x) * out.n_regions + r;
      if (mean == 0.0) {
        out.defined[k] = false;
        out.value[k] = std::nan("");
        continue;
      }
      double ss = 0.0;
      for (int t = 0; t < ix.n_years(); ++t)
        for (int w = 0; w < kWeeksPerYear; ++w) {
          const double d = panel.deaths(x, t, w, r) - mean;
          ss += d * d;
        }
      out.value[k] = ss / static_cast<double>(n - 1) / mean;
    }
  return out;
}

}  // namespace wmort
