#include "mortfit/likelihoods.hpp"

#include <cmath>

namespace mortfit {

const char* family_name(Family f) {
  switch (f) {
    case Family::Poisson: return "poisson";
    case Family::NegativeBinomial: return "negbin";
    case Family::Gaussian: return "gaussian";
  }
  return "?";
}

Vec MeanStructure::mean_log_rate(double c, const Vec& beta, const Vec& psi,
                                 const Vec& eta) const {
  if (beta.size() != n_beta() || psi.size() != n_psi() || eta.size() != n_eta())
    throw std::invalid_argument("parameter blocks do not match the design");
  Vec mhat = Vec::Constant(n_obs(), c);
  if (n_beta() > 0) mhat += design.matrix * beta;
  if (kind == MeanKind::RenshawHaberman) {
    Vec alpha = weight_design.weights(eta);
    Vec a = weight_design.observation_weights(alpha);
    mhat.array() += a.array() * (period_design.matrix * psi).array();
  }
  return mhat;
}

Vec link_mean(Family family, const Vec& exposures, const Vec& mhat) {
  if (family == Family::Gaussian) return mhat;
  Vec mu = exposures.array() * mhat.array().exp();
  for (int j = 0; j < mu.size(); ++j)
    if (!std::isfinite(mu[j]))
      throw std::overflow_error("non-finite mean at observation " +
                                std::to_string(j) + " (parameter blow-up)");
  return mu;
}

Vec mean_vector(const MeanStructure& s, Family family, const Vec& exposures,
                double c, const Vec& beta, const Vec& psi, const Vec& eta) {
  return link_mean(family, exposures, s.mean_log_rate(c, beta, psi, eta));
}

Vec pointwise_loglik(const ObservationModel& m, const Vec& mu, const Vec& d) {
  Vec ll(mu.size());
  switch (m.family) {
    case Family::Poisson:
      for (int j = 0; j < mu.size(); ++j) {
        if (!(mu[j] > 0)) throw std::domain_error("Poisson mean must be positive");
        ll[j] = d[j] * std::log(mu[j]) - mu[j] - std::lgamma(d[j] + 1.0);
      }
      break;
    case Family::NegativeBinomial: {
      const double phi = m.phi;
      if (!(phi > 0)) throw std::domain_error("NB dispersion phi must be positive");
      for (int j = 0; j < mu.size(); ++j) {
        if (!(mu[j] > 0)) throw std::domain_error("NB mean must be positive");
        ll[j] = std::lgamma(d[j] + phi) - std::lgamma(phi) -
                std::lgamma(d[j] + 1.0) + phi * std::log(phi) +
                d[j] * std::log(mu[j]) - (phi + d[j]) * std::log(phi + mu[j]);
      }
      break;
    }
    case Family::Gaussian: {
      const double s2 = m.sigma2;
      if (!(s2 > 0)) throw std::domain_error("Gaussian variance must be positive");
      const double lc = -0.5 * std::log(2.0 * M_PI * s2);
      for (int j = 0; j < mu.size(); ++j) {
        double r = d[j] - mu[j];
        ll[j] = lc - r * r / (2.0 * s2);
      }
      break;
    }
  }
  return ll;
}

Vec loglik_grad_linpred(const ObservationModel& m, const Vec& mu, const Vec& d) {
  Vec g(mu.size());
  switch (m.family) {
    case Family::Poisson:
      g = d - mu;
      break;
    case Family::NegativeBinomial:
      for (int j = 0; j < mu.size(); ++j)
        g[j] = d[j] - mu[j] * (m.phi + d[j]) / (m.phi + mu[j]);
      break;
    case Family::Gaussian:
      g = (d - mu) / m.sigma2;
      break;
  }
  return g;
}

double loglik_grad_logphi(const Vec& mu, const Vec& d, double phi) {
  double acc = 0.0;
  const double dg_phi = digamma(phi);
  const double logphi = std::log(phi);
  for (int j = 0; j < mu.size(); ++j)
    acc += digamma(d[j] + phi) - dg_phi + logphi + 1.0 -
           std::log(phi + mu[j]) - (phi + d[j]) / (phi + mu[j]);
  return phi * acc;
}

double loglik_grad_logsigma2(const Vec& mu, const Vec& d, double sigma2) {
  double acc = 0.0;
  for (int j = 0; j < mu.size(); ++j) {
    double r = d[j] - mu[j];
    acc += -0.5 + r * r / (2.0 * sigma2);
  }
  return acc;
}

double digamma(double x) {
  // recurrence into the asymptotic region, then the standard series
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
  return result;
}

}  // namespace mortfit
