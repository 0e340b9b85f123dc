#include "mortfit/spline_design.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "mortfit/csv.hpp"

namespace mortfit {

const char* kind_name(VarKind k) {
  switch (k) {
    case VarKind::Age: return "age";
    case VarKind::Period: return "period";
    case VarKind::Cohort: return "cohort";
    case VarKind::DiffConstant: return "diff_const";
  }
  return "?";
}

std::string column_name(VarKind kind, int population, int calendar) {
  if (kind == VarKind::DiffConstant)
    return std::to_string(population) + ":diff_const";
  return std::to_string(population) + ":" + kind_name(kind) + "[" +
         std::to_string(calendar) + "]";
}

int slope_change_value(int variable_index, int dense_position) {
  if (variable_index < 2)
    throw std::invalid_argument(
        "slope-change variables start at index 2; index-1 levels live in the constant");
  return std::max(dense_position - variable_index + 1, 0);
}

int SlopeChangeDesign::find(const std::string& name) const {
  for (int u = 0; u < cols(); ++u)
    if (columns[u].name == name) return u;
  return -1;
}

std::vector<std::string> SlopeChangeDesign::names() const {
  std::vector<std::string> out;
  out.reserve(columns.size());
  for (const auto& c : columns) out.push_back(c.name);
  return out;
}

void SlopeChangeDesign::write_csv(std::ostream& os) const {
  csv::write_row(os, names());
  std::vector<std::string> row(cols());
  for (int j = 0; j < rows(); ++j) {
    for (int u = 0; u < cols(); ++u) row[u] = csv::num(matrix(j, u));
    csv::write_row(os, row);
  }
}

SlopeChangeDesign build_single_population(const MortalityFrame& frame,
                                          const std::vector<VarKind>& kinds,
                                          int pop) {
  if (kinds.empty()) throw std::invalid_argument("empty kind set");

  std::vector<int> rows;
  for (int j = 0; j < frame.size(); ++j)
    if (frame.pop_idx[j] == pop) rows.push_back(j);
  if (rows.empty()) throw DataError("no observations for population " + std::to_string(pop));

  SlopeChangeDesign d;
  const int N = static_cast<int>(rows.size());
  std::vector<std::pair<ColumnInfo, const std::vector<int>*>> specs;
  for (VarKind k : kinds) {
    int n_idx = 0;
    const std::vector<int>* dense = nullptr;
    switch (k) {
      case VarKind::Age: n_idx = frame.n_ages(); dense = &frame.age_idx; break;
      case VarKind::Period: n_idx = frame.n_years(); dense = &frame.year_idx; break;
      case VarKind::Cohort: n_idx = frame.n_cohorts(); dense = &frame.cohort_idx; break;
      case VarKind::DiffConstant:
        throw std::invalid_argument("difference constant is added by build_joint");
    }
    for (int i = 2; i <= n_idx; ++i) {
      int calendar = 0;
      switch (k) {
        case VarKind::Age: calendar = frame.age_min + i - 1; break;
        case VarKind::Period: calendar = frame.year_min + i - 1; break;
        case VarKind::Cohort: calendar = frame.cohorts[i - 1]; break;
        default: break;
      }
      specs.push_back({{k, pop, i, calendar, column_name(k, pop, calendar)}, dense});
    }
  }

  d.matrix.resize(N, static_cast<int>(specs.size()));
  d.columns.reserve(specs.size());
  for (size_t u = 0; u < specs.size(); ++u) {
    const auto& [info, dense] = specs[u];
    for (int j = 0; j < N; ++j)
      d.matrix(j, static_cast<int>(u)) =
          slope_change_value(info.index, (*dense)[rows[j]]);
    d.columns.push_back(info);
  }
  return d;
}

SlopeChangeDesign build_joint(const SlopeChangeDesign& design_pop1,
                              bool include_difference_constant) {
  const int N = design_pop1.rows();
  const int U = design_pop1.cols();
  const int total = 2 * U + (include_difference_constant ? 1 : 0);

  SlopeChangeDesign joint;
  joint.matrix = Mat::Zero(2 * N, total);
  joint.matrix.topLeftCorner(N, U) = design_pop1.matrix;
  joint.matrix.block(N, 0, N, U) = design_pop1.matrix;
  joint.matrix.block(N, U, N, U) = design_pop1.matrix;

  joint.columns = design_pop1.columns;
  for (const auto& c : design_pop1.columns) {
    ColumnInfo diff = c;
    diff.population = 2;
    diff.name = column_name(c.kind, 2, c.calendar);
    joint.columns.push_back(diff);
  }
  if (include_difference_constant) {
    joint.matrix.col(total - 1).tail(N).setOnes();
    joint.columns.push_back(
        {VarKind::DiffConstant, 2, 0, 0, column_name(VarKind::DiffConstant, 2, 0)});
  }
  return joint;
}

static SlopeChangeDesign subset(const SlopeChangeDesign& design,
                                const std::vector<int>& keep) {
  SlopeChangeDesign out;
  out.matrix.resize(design.rows(), static_cast<int>(keep.size()));
  out.columns.reserve(keep.size());
  for (size_t u = 0; u < keep.size(); ++u) {
    out.matrix.col(static_cast<int>(u)) = design.matrix.col(keep[u]);
    out.columns.push_back(design.columns[keep[u]]);
  }
  return out;
}

SlopeChangeDesign drop_columns(const SlopeChangeDesign& design,
                               const std::vector<std::string>& names) {
  std::set<std::string> seen;
  std::vector<bool> drop(design.cols(), false);
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw std::invalid_argument("column dropped twice: " + n);
    int u = design.find(n);
    if (u < 0) throw std::invalid_argument("unknown column: " + n);
    drop[u] = true;
  }
  std::vector<int> keep;
  for (int u = 0; u < design.cols(); ++u)
    if (!drop[u]) keep.push_back(u);
  return subset(design, keep);
}

SlopeChangeDesign keep_columns(const SlopeChangeDesign& design,
                               const std::vector<std::string>& names) {
  std::vector<int> keep;
  for (const auto& n : names) {
    int u = design.find(n);
    if (u < 0) throw std::invalid_argument("unknown column: " + n);
    keep.push_back(u);
  }
  return subset(design, keep);
}

SlopeChangeDesign select_kinds(const SlopeChangeDesign& design,
                               const std::vector<VarKind>& kinds) {
  std::vector<int> keep;
  for (int u = 0; u < design.cols(); ++u)
    if (std::find(kinds.begin(), kinds.end(), design.columns[u].kind) != kinds.end())
      keep.push_back(u);
  return subset(design, keep);
}

Vec levels_from_slope_changes(const Vec& beta, int n_indices) {
  if (beta.size() != n_indices - 1)
    throw std::invalid_argument("need one slope change per index 2..n");
  Vec level = Vec::Zero(n_indices);
  double slope = 0.0;
  for (int k = 2; k <= n_indices; ++k) {
    slope += beta[k - 2];
    level[k - 1] = level[k - 2] + slope;
  }
  return level;
}

std::string weight_column_name(int population, int calendar) {
  return std::to_string(population) + ":weight[" + std::to_string(calendar) + "]";
}

int TrendWeightDesign::find(const std::string& name) const {
  for (int u = 0; u < cols(); ++u)
    if (columns[u].name == name) return u;
  return -1;
}

Vec TrendWeightDesign::weights(const Vec& eta) const {
  Vec alpha1 = matrix * eta;
  Vec alpha(alpha1.size());
  for (int start = 0; start < alpha1.size(); start += rows_per_pop) {
    double m = alpha1.segment(start, rows_per_pop).maxCoeff();
    alpha.segment(start, rows_per_pop) =
        (alpha1.segment(start, rows_per_pop).array() - m).exp();
  }
  return alpha;
}

Vec TrendWeightDesign::observation_weights(const Vec& alpha) const {
  Vec a(selector.size());
  for (size_t j = 0; j < selector.size(); ++j) a[j] = alpha[selector[j]];
  return a;
}

TrendWeightDesign build_trend_weight_design(const MortalityFrame& frame) {
  const int b = frame.n_ages();
  const int P = frame.populations;

  Mat ramp(b, b);  // index 1 is included for weights: column i has (k-i+1)+
  for (int k = 1; k <= b; ++k)
    for (int i = 1; i <= b; ++i) ramp(k - 1, i - 1) = std::max(k - i + 1, 0);

  TrendWeightDesign d;
  d.rows_per_pop = b;
  d.matrix = Mat::Zero(P * b, P * b);
  d.matrix.topLeftCorner(b, b) = ramp;
  if (P == 2) {
    d.matrix.block(b, 0, b, b) = ramp;
    d.matrix.block(b, b, b, b) = ramp;
  }
  for (int p = 1; p <= P; ++p)
    for (int i = 1; i <= b; ++i) {
      int calendar = frame.age_min + i - 1;
      d.columns.push_back(
          {VarKind::Age, p, i, calendar, weight_column_name(p, calendar)});
    }
  d.selector.resize(frame.size());
  for (int j = 0; j < frame.size(); ++j)
    d.selector[j] = (frame.pop_idx[j] - 1) * b + (frame.age_idx[j] - 1);
  return d;
}

TrendWeightDesign drop_weight_columns(const TrendWeightDesign& design,
                                      const std::vector<std::string>& names) {
  std::set<std::string> seen;
  std::vector<bool> drop(design.cols(), false);
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw std::invalid_argument("column dropped twice: " + n);
    int u = design.find(n);
    if (u < 0) throw std::invalid_argument("unknown column: " + n);
    drop[u] = true;
  }
  TrendWeightDesign out;
  out.rows_per_pop = design.rows_per_pop;
  out.selector = design.selector;
  std::vector<int> keep;
  for (int u = 0; u < design.cols(); ++u)
    if (!drop[u]) keep.push_back(u);
  out.matrix.resize(design.rows(), static_cast<int>(keep.size()));
  for (size_t u = 0; u < keep.size(); ++u) {
    out.matrix.col(static_cast<int>(u)) = design.matrix.col(keep[u]);
    out.columns.push_back(design.columns[keep[u]]);
  }
  return out;
}

}  // namespace mortfit
