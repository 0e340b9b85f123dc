#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mortfit/mortality_data.hpp"
#include "mortfit/types.hpp"

namespace mortfit {

enum class VarKind { Age, Period, Cohort, DiffConstant };

const char* kind_name(VarKind k);

struct ColumnInfo {
  VarKind kind;
  int population;  // 1-based; for pop >= 2 the column is a difference variable
  int index;       // dense index i >= 2 (0 for the difference constant)
  int calendar;    // calendar age / year / birth year the index refers to
  std::string name;  // "{pop}:{kind}[{calendar}]"
};

std::string column_name(VarKind kind, int population, int calendar);
std::string weight_column_name(int population, int calendar);

// Slope-change dummy: a variable at index i contributes (k-i+1)+ at dense
// position k. Index-1 variables are excluded; their level is the constant's.
int slope_change_value(int variable_index, int dense_position);

// Design matrix of slope-change dummies with per-column metadata.
struct SlopeChangeDesign {
  Mat matrix;                       // N x U, integer-valued entries
  std::vector<ColumnInfo> columns;  // length U

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }

  int find(const std::string& name) const;  // -1 if absent
  std::vector<std::string> names() const;

  void write_csv(std::ostream& os) const;
};

// One population's design over the requested kinds: a column for each index
// 2..max per kind, rows parallel to that population's frame block.
SlopeChangeDesign build_single_population(const MortalityFrame& frame,
                                          const std::vector<VarKind>& kinds,
                                          int pop = 1);

// Four-quadrant joint design for two stacked populations:
//   [ X1  0  ]
//   [ X1  X1 ]
// with the second block's columns acting as difference variables, plus an
// optional all-ones difference constant over the second block.
SlopeChangeDesign build_joint(const SlopeChangeDesign& design_pop1,
                              bool include_difference_constant);

SlopeChangeDesign drop_columns(const SlopeChangeDesign& design,
                               const std::vector<std::string>& names);

SlopeChangeDesign keep_columns(const SlopeChangeDesign& design,
                               const std::vector<std::string>& names);

// Subset of columns by kind, preserving order.
SlopeChangeDesign select_kinds(const SlopeChangeDesign& design,
                               const std::vector<VarKind>& kinds);

// Level curve implied by slope-change parameters over indices 1..n_indices:
// level[k] = sum_{i<=k} sum_{i'<=i} beta, i.e. a double cumulative sum with
// level[1] = 0. beta[t] belongs to index t+2.
Vec levels_from_slope_changes(const Vec& beta, int n_indices);

// Trend-weight design: alpha1 = Y * eta gives raw per-age weights, one row
// per (population, age). Columns cover index 1..b per population (index 1 is
// the base ramp), with the same four-quadrant difference layout for pop 2.
// The selector maps each observation to its (population, age) row.
struct TrendWeightDesign {
  Mat matrix;                       // (P*b) x V
  std::vector<ColumnInfo> columns;  // kind is Age; index may be 1
  std::vector<int> selector;        // length N, 0-based row of alpha1
  int rows_per_pop = 0;

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
  int find(const std::string& name) const;

  // alpha = exp(alpha1 - max(alpha1)) taken per population block.
  Vec weights(const Vec& eta) const;
  // Per-observation weight vector A.
  Vec observation_weights(const Vec& alpha) const;
};

TrendWeightDesign build_trend_weight_design(const MortalityFrame& frame);

TrendWeightDesign drop_weight_columns(const TrendWeightDesign& design,
                                      const std::vector<std::string>& names);

}  // namespace mortfit
