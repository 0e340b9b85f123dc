#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mortfit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using IVec = Eigen::VectorXi;

// Thrown for bad input data or malformed files (CLI exit code 2).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when MCMC cannot produce a usable sample (CLI exit code 3).
struct SamplerError : std::runtime_error {
  explicit SamplerError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mortfit
