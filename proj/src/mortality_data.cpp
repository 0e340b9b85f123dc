#include "mortfit/mortality_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "mortfit/csv.hpp"

namespace mortfit {

Vec MortalityFrame::log_exposures() const {
  Vec v(size());
  for (int j = 0; j < size(); ++j) v[j] = std::log(exposures[j]);
  return v;
}

Vec MortalityFrame::deaths_vec() const {
  Vec v(size());
  for (int j = 0; j < size(); ++j) v[j] = deaths[j];
  return v;
}

Vec MortalityFrame::exposures_vec() const {
  Vec v(size());
  for (int j = 0; j < size(); ++j) v[j] = exposures[j];
  return v;
}

std::vector<int> MortalityFrame::cohort_cell_counts(int pop) const {
  std::vector<int> counts(n_cohorts(), 0);
  for (int j = 0; j < size(); ++j)
    if (pop_idx[j] == pop) ++counts[cohort_idx[j] - 1];
  return counts;
}

Mat MortalityFrame::to_grid(int pop, bool use_deaths, double missing) const {
  Mat g = Mat::Constant(n_ages(), n_years(), missing);
  for (int j = 0; j < size(); ++j) {
    if (pop_idx[j] != pop) continue;
    g(age_idx[j] - 1, year_idx[j] - 1) =
        use_deaths ? static_cast<double>(deaths[j]) : exposures[j];
  }
  return g;
}

MortalityFrame load_rectangles(const std::vector<RectGrid>& grids,
                               std::vector<std::string> pop_names) {
  if (grids.empty() || grids.size() > 2)
    throw DataError("expected one or two population grids");
  const int P = static_cast<int>(grids.size());
  const int b = grids[0].n_ages();
  const int a = grids[0].n_years();
  for (const auto& g : grids) {
    if (g.deaths.rows() != g.exposures.rows() ||
        g.deaths.cols() != g.exposures.cols())
      throw DataError("deaths and exposures grids have different shapes");
    if (g.n_ages() != b || g.n_years() != a || g.age_min != grids[0].age_min ||
        g.year_min != grids[0].year_min)
      throw DataError("population grids do not share dimensions");
    for (int i = 0; i < g.n_ages(); ++i)
      for (int j = 0; j < g.n_years(); ++j) {
        double d = g.deaths(i, j);
        if (d < 0 || d != std::floor(d))
          throw DataError("death count must be a non-negative integer at age " +
                          std::to_string(g.age_min + i) + ", year " +
                          std::to_string(g.year_min + j));
        if (!(g.exposures(i, j) > 0))
          throw DataError("non-positive exposure at age " +
                          std::to_string(g.age_min + i) + ", year " +
                          std::to_string(g.year_min + j));
      }
  }

  MortalityFrame f;
  f.populations = P;
  f.pop_names = std::move(pop_names);
  while (static_cast<int>(f.pop_names.size()) < P)
    f.pop_names.push_back("pop" + std::to_string(f.pop_names.size() + 1));
  f.age_min = grids[0].age_min;
  f.age_max = grids[0].age_min + b - 1;
  f.year_min = grids[0].year_min;
  f.year_max = grids[0].year_min + a - 1;

  const int cohort_lo = f.year_min - f.age_max;
  const int cohort_hi = f.year_max - f.age_min;
  for (int c = cohort_lo; c <= cohort_hi; ++c) f.cohorts.push_back(c);

  const int n = P * a * b;
  f.deaths.reserve(n);
  for (int p = 0; p < P; ++p)
    for (int yj = 0; yj < a; ++yj)
      for (int ai = 0; ai < b; ++ai) {
        f.deaths.push_back(static_cast<int>(grids[p].deaths(ai, yj)));
        f.exposures.push_back(grids[p].exposures(ai, yj));
        f.age.push_back(f.age_min + ai);
        f.year.push_back(f.year_min + yj);
        f.cohort.push_back(f.year_min + yj - (f.age_min + ai));
        f.age_idx.push_back(ai + 1);
        f.year_idx.push_back(yj + 1);
        f.cohort_idx.push_back(f.cohort.back() - cohort_lo + 1);
        f.pop_idx.push_back(p + 1);
      }
  return f;
}

int cohort_count(const MortalityFrame& frame) { return frame.n_cohorts(); }

static MortalityFrame keep_cohorts(const MortalityFrame& frame,
                                   const std::vector<bool>& keep) {
  MortalityFrame f;
  f.populations = frame.populations;
  f.pop_names = frame.pop_names;
  f.age_min = frame.age_min;
  f.age_max = frame.age_max;
  f.year_min = frame.year_min;
  f.year_max = frame.year_max;

  std::map<int, int> dense;  // surviving cohort -> new 1-based index
  for (size_t c = 0; c < frame.cohorts.size(); ++c)
    if (keep[c]) {
      f.cohorts.push_back(frame.cohorts[c]);
      dense[frame.cohorts[c]] = static_cast<int>(f.cohorts.size());
    }
  if (f.cohorts.empty()) throw DataError("cohort trimming removed every cell");

  for (int j = 0; j < frame.size(); ++j) {
    if (!keep[frame.cohort_idx[j] - 1]) continue;
    f.deaths.push_back(frame.deaths[j]);
    f.exposures.push_back(frame.exposures[j]);
    f.age.push_back(frame.age[j]);
    f.year.push_back(frame.year[j]);
    f.cohort.push_back(frame.cohort[j]);
    f.age_idx.push_back(frame.age_idx[j]);
    f.year_idx.push_back(frame.year_idx[j]);
    f.cohort_idx.push_back(dense.at(frame.cohort[j]));
    f.pop_idx.push_back(frame.pop_idx[j]);
  }
  return f;
}

MortalityFrame trim_cohorts(const MortalityFrame& frame, int min_cells) {
  if (min_cells <= 1) return frame;
  auto counts = frame.cohort_cell_counts(1);
  std::vector<bool> keep(counts.size());
  for (size_t c = 0; c < counts.size(); ++c) keep[c] = counts[c] >= min_cells;
  return keep_cohorts(frame, keep);
}

MortalityFrame trim_cohort_range(const MortalityFrame& frame, int lo, int hi) {
  std::vector<bool> keep(frame.cohorts.size());
  for (size_t c = 0; c < frame.cohorts.size(); ++c)
    keep[c] = frame.cohorts[c] >= lo && frame.cohorts[c] <= hi;
  return keep_cohorts(frame, keep);
}

static double parse_num(const std::string& s, const std::string& path) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("cannot parse number '" + s + "' in " + path);
  }
}

RectGrid read_wide_csv(const std::string& deaths_path,
                       const std::string& exposures_path) {
  auto load = [](const std::string& path, int& age_min, int& year_min) {
    auto t = csv::read(path);
    if (t.header.size() < 2) throw DataError("wide CSV needs age + year columns: " + path);
    const int ny = static_cast<int>(t.header.size()) - 1;
    year_min = static_cast<int>(parse_num(t.header[1], path));
    for (int j = 1; j < ny; ++j) {
      int y = static_cast<int>(parse_num(t.header[1 + j], path));
      if (y != year_min + j) throw DataError("years not consecutive in " + path);
    }
    Mat g(t.rows.size(), ny);
    age_min = static_cast<int>(parse_num(t.rows.at(0).at(0), path));
    for (size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i].size() != t.header.size())
        throw DataError("ragged row in " + path);
      int a = static_cast<int>(parse_num(t.rows[i][0], path));
      if (a != age_min + static_cast<int>(i))
        throw DataError("ages not consecutive in " + path);
      for (int j = 0; j < ny; ++j) g(i, j) = parse_num(t.rows[i][1 + j], path);
    }
    return g;
  };

  RectGrid g;
  int am1 = 0, ym1 = 0, am2 = 0, ym2 = 0;
  g.deaths = load(deaths_path, am1, ym1);
  g.exposures = load(exposures_path, am2, ym2);
  if (am1 != am2 || ym1 != ym2 || g.deaths.rows() != g.exposures.rows() ||
      g.deaths.cols() != g.exposures.cols())
    throw DataError("deaths and exposures tables do not line up: " + deaths_path);
  g.age_min = am1;
  g.year_min = ym1;
  return g;
}

// HMD files have a title line and a blank line before the column header.
static std::map<std::pair<int, int>, double> read_hmd_column(
    const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ss >> tok) toks.push_back(tok);
    if (!toks.empty() && toks[0] == "Year") {
      header = toks;
      break;
    }
  }
  if (header.empty()) throw DataError("no 'Year Age ...' header in " + path);
  int col = -1;
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == column) col = static_cast<int>(i);
  if (col < 0) throw DataError("column '" + column + "' not in " + path);

  std::map<std::pair<int, int>, double> out;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (static_cast<int>(toks.size()) <= col)
      throw DataError("short row in " + path);
    int year = static_cast<int>(parse_num(toks[0], path));
    // open intervals like "110+" are skipped; we model closed ages only
    std::string agestr = toks[1];
    if (!agestr.empty() && (agestr.back() == '+' || agestr.back() == '-')) continue;
    int age = static_cast<int>(parse_num(agestr, path));
    if (toks[col] == ".") continue;  // HMD missing-value marker
    out[{year, age}] = parse_num(toks[col], path);
  }
  return out;
}

RectGrid read_hmd(const std::string& deaths_path,
                  const std::string& exposures_path, const std::string& column,
                  int age_lo, int age_hi, int year_lo, int year_hi) {
  auto d = read_hmd_column(deaths_path, column);
  auto e = read_hmd_column(exposures_path, column);
  RectGrid g;
  g.age_min = age_lo;
  g.year_min = year_lo;
  g.deaths.resize(age_hi - age_lo + 1, year_hi - year_lo + 1);
  g.exposures.resize(g.deaths.rows(), g.deaths.cols());
  for (int y = year_lo; y <= year_hi; ++y)
    for (int a = age_lo; a <= age_hi; ++a) {
      auto key = std::make_pair(y, a);
      auto di = d.find(key);
      auto ei = e.find(key);
      if (di == d.end() || ei == e.end())
        throw DataError("HMD data missing year " + std::to_string(y) +
                        ", age " + std::to_string(a));
      g.deaths(a - age_lo, y - year_lo) = std::round(di->second);
      g.exposures(a - age_lo, y - year_lo) = ei->second;
    }
  return g;
}

}  // namespace mortfit
