#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mortfit/likelihoods.hpp"
#include "mortfit/types.hpp"

namespace mortfit {

enum class PriorFamily { Laplace, StudentT, Cauchy, Normal };

const char* prior_name(PriorFamily f);

struct Interval {
  double lo, hi;
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Shrinkage prior on the slope-change parameters plus hyperprior ranges.
// Unset (nullopt) scale / nu are estimated: the log-transformed value is
// sampled with a uniform density on its range, which puts a 1/x density on
// the natural scale. Negating the fixed-hyperparameter log prior recovers the
// lasso / Cauchy / t-nu penalties up to an additive constant.
struct PriorSpec {
  PriorFamily family = PriorFamily::Laplace;
  std::optional<double> nu;     // StudentT only; nullopt = estimated
  std::optional<double> scale;  // s = 1/lambda; nullopt = estimated
  Interval log_s_range{-6.0, -3.0};
  Interval log_c_range{-8.0, -3.0};
  Interval log_nu_range{-1.0, 6.0};

  bool scale_estimated() const { return !scale.has_value(); }
  bool nu_estimated() const {
    return family == PriorFamily::StudentT && !nu.has_value();
  }
};

// log density of one shrunk parameter at scale s (and nu for StudentT).
double shrink_log_density(PriorFamily family, double b, double s, double nu);
double shrink_grad_b(PriorFamily family, double b, double s, double nu);
double shrink_grad_log_s(PriorFamily family, double b, double s, double nu);
double shrink_grad_log_nu(double b, double s, double nu);  // StudentT

// t-2 closed forms on the paper's (2+b^2) scale: f(b) = (2+b^2)^(-3/2),
// F(b) = [b/sqrt(2+b^2) + 1]/2.
double t2_pdf(double b);
double t2_cdf(double b);

// Sum of log shrinkage densities over beta plus the hyperprior log densities
// for any estimated hyperparameters (log-scale values passed in `hyper`,
// order: log_s then log_nu). Out-of-range estimated hyperparameters give
// -infinity.
double log_prior(const PriorSpec& spec, const Vec& beta,
                 const std::vector<double>& hyper = {});

struct MomentReport {
  double t6_variance, t6_kurtosis;
  double laplace_variance, laplace_kurtosis;
};

// t(6) against Laplace(sqrt(3)/2): both have variance 1.5 and kurtosis 6.
MomentReport t6_laplace_match_check();

// --- joint log density -----------------------------------------------------

// Natural-scale sampled coordinates, in order:
//   c, beta (X), psi (Z), eta (Y), [log_s], [log_nu], [log_phi], [log_sigma2]
// c is uniform on log_c_range; log_s / log_nu are uniform on their ranges;
// log_phi and log_sigma2 are flat on the whole real line.
class JointModel {
 public:
  JointModel(MeanStructure structure, Family family, PriorSpec prior, Vec d,
             Vec exposures);

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const MeanStructure& structure() const { return structure_; }
  Family family() const { return family_; }
  const PriorSpec& prior() const { return prior_; }
  const Vec& data() const { return d_; }
  int n_obs() const { return static_cast<int>(d_.size()); }

  // Positions of blocks inside the parameter vector (-1 when absent).
  int c_pos() const { return 0; }
  int beta_pos() const { return 1; }
  int psi_pos() const { return 1 + structure_.n_beta(); }
  int eta_pos() const { return psi_pos() + structure_.n_psi(); }
  int log_s_pos() const { return log_s_pos_; }
  int log_nu_pos() const { return log_nu_pos_; }
  int log_phi_pos() const { return log_phi_pos_; }
  int log_sigma2_pos() const { return log_sigma2_pos_; }
  int n_shrunk() const { return structure_.n_beta() + structure_.n_psi() + structure_.n_eta(); }

  bool is_shrunk(int pos) const {
    return pos >= beta_pos() && pos < beta_pos() + n_shrunk();
  }

  // Unnormalized log of likelihood x postulated parameter densities; the MCMC
  // target and, negated at fixed hyperparameters, the penalized objective.
  double joint_log_density(const Vec& theta, Vec* grad = nullptr) const;

  Vec pointwise_loglik(const Vec& theta) const;
  Vec mean_vector(const Vec& theta) const;

  // Zero shrunk parameters, range midpoints for bounded coordinates, and a
  // small downward starting slope on the first period variable to break the
  // trend-sign ambiguity.
  Vec init_vector(double phi_init = 1000.0, double sigma2_init = 1.0) const;

  // Bounded coordinates and their ranges (for the sampler's transforms).
  struct Bound {
    int pos;
    Interval range;
  };
  const std::vector<Bound>& bounds() const { return bounds_; }

  ObservationModel observation_model(const Vec& theta) const;

 private:
  MeanStructure structure_;
  Family family_;
  PriorSpec prior_;
  Vec d_, exposures_;
  int dim_ = 0;
  int log_s_pos_ = -1, log_nu_pos_ = -1, log_phi_pos_ = -1, log_sigma2_pos_ = -1;
  std::vector<std::string> names_;
  std::vector<Bound> bounds_;
};

}  // namespace mortfit
