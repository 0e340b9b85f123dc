#pragma once

#include "mortfit/spline_design.hpp"
#include "mortfit/types.hpp"

namespace mortfit {

enum class Family { Poisson, NegativeBinomial, Gaussian };

const char* family_name(Family f);

// Observation families. The negative binomial uses the (mean, phi)
// parameterization with variance mu^2/phi + mu, NOT mu + phi*mu^2; large phi
// recovers the Poisson. Gaussian is the identity-link model for 1-D curves.
struct ObservationModel {
  Family family = Family::Poisson;
  double phi = 0.0;     // NB dispersion
  double sigma2 = 1.0;  // Gaussian noise variance
};

enum class MeanKind { APC, RenshawHaberman, Curve1D };

// Mean structure on the log-rate (or identity for Curve1D) scale:
//   APC / Curve1D:    mhat = c + X beta
//   Renshaw-Haberman: mhat = c + X beta + A o (Z psi)
// where A holds per-observation trend weights alpha = exp(alpha1 - max),
// taken per population, alpha1 = Y eta.
struct MeanStructure {
  MeanKind kind = MeanKind::APC;
  SlopeChangeDesign design;         // X (all columns for APC/Curve1D)
  SlopeChangeDesign period_design;  // Z, Renshaw-Haberman only
  TrendWeightDesign weight_design;  // Y + selector, Renshaw-Haberman only

  int n_obs() const { return design.rows(); }
  int n_beta() const { return design.cols(); }
  int n_psi() const {
    return kind == MeanKind::RenshawHaberman ? period_design.cols() : 0;
  }
  int n_eta() const {
    return kind == MeanKind::RenshawHaberman ? weight_design.cols() : 0;
  }

  Vec mean_log_rate(double c, const Vec& beta, const Vec& psi,
                    const Vec& eta) const;
};

// Applies the link: mu = exposures o exp(mhat) for count families, mu = mhat
// for Gaussian. Throws with the offending index if any entry is non-finite.
Vec mean_vector(const MeanStructure& s, Family family, const Vec& exposures,
                double c, const Vec& beta, const Vec& psi, const Vec& eta);

Vec link_mean(Family family, const Vec& exposures, const Vec& mhat);

// Per-observation log p(d[j] | mu[j]).
Vec pointwise_loglik(const ObservationModel& m, const Vec& mu, const Vec& d);

// d loglik / d mhat per observation (count families), or d/d mu (Gaussian).
Vec loglik_grad_linpred(const ObservationModel& m, const Vec& mu, const Vec& d);

double loglik_grad_logphi(const Vec& mu, const Vec& d, double phi);
double loglik_grad_logsigma2(const Vec& mu, const Vec& d, double sigma2);

double digamma(double x);

}  // namespace mortfit
