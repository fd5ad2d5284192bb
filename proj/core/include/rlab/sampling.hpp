#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <string>

namespace rlab {

enum class NoiseKind { gaussian, uniform_bounded, rademacher_scaled };

// Zero-mean sub-Gaussian noise; sigma is the sub-Gaussian parameter
// (gaussian: the std, uniform on [-c,c]: c, rademacher*c: c).
struct NoiseModel {
  NoiseKind kind = NoiseKind::gaussian;
  double sigma = 0.0;
};

NoiseKind noise_kind_from_string(const std::string& name);
std::string to_string(NoiseKind kind);

class Rng;
double draw_noise(const NoiseModel& noise, Rng& rng);

// n i.i.d. uniform points in the unit ball B^d (rows are points):
// direction from a normalized Gaussian, radius U^(1/d).
Eigen::MatrixXd sample_uniform_ball(int d, int n, std::uint64_t seed);

struct Dataset {
  Eigen::MatrixXd xs;  // n x d
  Eigen::VectorXd ys;  // n
  std::string target_id;
  NoiseModel noise;
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(xs.rows()); }
  int dim() const { return static_cast<int>(xs.cols()); }
};

Dataset sample_dataset(const std::function<double(const Eigen::VectorXd&)>& target,
                       const std::string& target_id, int d, int n, const NoiseModel& noise,
                       std::uint64_t seed);

// CSV with header x_1,...,x_d,y; comma delimiter, '.' decimal point, LF rows.
std::string dataset_to_csv(const Dataset& data);
Dataset dataset_from_csv(const std::string& text);

}  // namespace rlab
