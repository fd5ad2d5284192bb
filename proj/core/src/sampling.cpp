#include "rlab/sampling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rlab/io.hpp"
#include "rlab/rng.hpp"

namespace rlab {

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "gaussian") return NoiseKind::gaussian;
  if (name == "uniform_bounded") return NoiseKind::uniform_bounded;
  if (name == "rademacher_scaled") return NoiseKind::rademacher_scaled;
  throw std::invalid_argument("unknown noise kind: " + name);
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::gaussian:
      return "gaussian";
    case NoiseKind::uniform_bounded:
      return "uniform_bounded";
    case NoiseKind::rademacher_scaled:
      return "rademacher_scaled";
  }
  return "unknown";
}

double draw_noise(const NoiseModel& noise, Rng& rng) {
  switch (noise.kind) {
    case NoiseKind::gaussian:
      return noise.sigma * rng.normal();
    case NoiseKind::uniform_bounded:
      return rng.uniform(-noise.sigma, noise.sigma);
    case NoiseKind::rademacher_scaled:
      return noise.sigma * rng.sign();
  }
  return 0.0;
}

Eigen::MatrixXd sample_uniform_ball(int d, int n, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("sample_uniform_ball: d must be >= 1");
  if (n < 1) throw std::invalid_argument("sample_uniform_ball: n must be >= 1");
  Rng rng = Rng::derive(seed, 0xBA11);
  Eigen::MatrixXd xs(n, d);
  for (int i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      xs(i, k) = rng.normal();
      norm2 += xs(i, k) * xs(i, k);
    }
    const double norm = std::sqrt(norm2);
    const double radius = std::pow(rng.uniform01(), 1.0 / d);
    if (norm > 0.0) xs.row(i) *= radius / norm;
  }
  return xs;
}

Dataset sample_dataset(const std::function<double(const Eigen::VectorXd&)>& target,
                       const std::string& target_id, int d, int n, const NoiseModel& noise,
                       std::uint64_t seed) {
  Dataset data;
  data.xs = sample_uniform_ball(d, n, seed);
  data.ys.resize(n);
  data.target_id = target_id;
  data.noise = noise;
  data.seed = seed;
  Rng rng = Rng::derive(seed, 0x4015E);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd x = data.xs.row(i).transpose();
    data.ys[i] = target(x) + (noise.sigma > 0.0 ? draw_noise(noise, rng) : 0.0);
  }
  return data;
}

std::string dataset_to_csv(const Dataset& data) {
  std::ostringstream out;
  for (int k = 0; k < data.dim(); ++k) out << "x_" << (k + 1) << ",";
  out << "y\n";
  for (int i = 0; i < data.n(); ++i) {
    for (int k = 0; k < data.dim(); ++k) out << fmt_double(data.xs(i, k)) << ",";
    out << fmt_double(data.ys[i]) << "\n";
  }
  return out.str();
}

Dataset dataset_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("dataset_from_csv: empty input");
  int d = 0;
  {
    std::istringstream header(line);
    std::string col;
    std::vector<std::string> cols;
    while (std::getline(header, col, ',')) cols.push_back(col);
    if (cols.empty() || cols.back() != "y")
      throw std::invalid_argument("dataset_from_csv: header must end with y");
    d = static_cast<int>(cols.size()) - 1;
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    std::vector<double> row;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    if (static_cast<int>(row.size()) != d + 1)
      throw std::invalid_argument("dataset_from_csv: ragged row");
    rows.push_back(std::move(row));
  }
  Dataset data;
  data.xs.resize(static_cast<Eigen::Index>(rows.size()), d);
  data.ys.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int k = 0; k < d; ++k) data.xs(static_cast<Eigen::Index>(i), k) = rows[i][k];
    data.ys[static_cast<Eigen::Index>(i)] = rows[i][d];
  }
  return data;
}

}  // namespace rlab
