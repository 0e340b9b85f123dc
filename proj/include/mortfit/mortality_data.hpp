#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mortfit/types.hpp"

namespace mortfit {

// One population's deaths/exposures rectangle. Rows are ages (ascending),
// columns are calendar years (ascending).
struct RectGrid {
  int age_min = 0;
  int year_min = 0;
  Mat deaths;     // integer-valued, non-negative
  Mat exposures;  // strictly positive person-years

  int n_ages() const { return static_cast<int>(deaths.rows()); }
  int n_years() const { return static_cast<int>(deaths.cols()); }
};

// Long-format observations for one or two populations. Cell order is
// population-major, then year-major with ages ascending within a year.
// Dense indices are 1-based; cohort = year - age in calendar values.
class MortalityFrame {
 public:
  int populations = 1;
  std::vector<std::string> pop_names;

  int age_min = 0, age_max = 0;
  int year_min = 0, year_max = 0;
  std::vector<int> cohorts;  // calendar birth years present, ascending

  std::vector<int> deaths;
  std::vector<double> exposures;
  std::vector<int> age;     // calendar values
  std::vector<int> year;
  std::vector<int> cohort;  // year - age
  std::vector<int> age_idx;     // 1..n_ages()
  std::vector<int> year_idx;    // 1..n_years()
  std::vector<int> cohort_idx;  // 1..n_cohorts()
  std::vector<int> pop_idx;     // 1-based

  int size() const { return static_cast<int>(deaths.size()); }
  int block_size() const { return size() / populations; }
  int n_ages() const { return age_max - age_min + 1; }
  int n_years() const { return year_max - year_min + 1; }
  int n_cohorts() const { return static_cast<int>(cohorts.size()); }

  Vec log_exposures() const;
  Vec deaths_vec() const;
  Vec exposures_vec() const;

  // Cells per cohort within one population block.
  std::vector<int> cohort_cell_counts(int pop = 1) const;

  // Re-pivots one population block back to an age x year grid; cells dropped
  // by trimming come back as the `missing` fill.
  Mat to_grid(int pop, bool use_deaths, double missing = -1.0) const;
};

// Builds the long frame from per-population rectangles. Grids must share
// dimensions; exposures must be positive and deaths non-negative integers.
MortalityFrame load_rectangles(const std::vector<RectGrid>& grids,
                               std::vector<std::string> pop_names = {});

// Distinct cohorts per population (a+b-1 before any trimming).
int cohort_count(const MortalityFrame& frame);

// Drops cells belonging to cohorts observed in fewer than min_cells cells
// per population, then re-densifies the cohort index.
MortalityFrame trim_cohorts(const MortalityFrame& frame, int min_cells);

// Keeps only cells with cohort in [lo, hi].
MortalityFrame trim_cohort_range(const MortalityFrame& frame, int lo, int hi);

// Wide CSV: header row "age,<year>,<year>,..."; one row per age.
RectGrid read_wide_csv(const std::string& deaths_path,
                       const std::string& exposures_path);

// Human Mortality Database period-table text (Year Age Female Male Total).
// Fractional counts are rounded to the nearest integer for deaths.
RectGrid read_hmd(const std::string& deaths_path,
                  const std::string& exposures_path,
                  const std::string& column,  // "Male", "Female" or "Total"
                  int age_lo, int age_hi, int year_lo, int year_hi);

}  // namespace mortfit
