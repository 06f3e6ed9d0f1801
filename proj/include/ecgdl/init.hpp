#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "ecgdl/common.hpp"
#include "ecgdl/tensor.hpp"

namespace ecgdl {

// He (Kaiming) normal initialization: N(0, sqrt(2 / fan_in)).
template <typename T>
void he_normal_init(Tensor<T>& w, std::size_t fan_in, Rng& rng) {
  std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / static_cast<double>(fan_in)));
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = static_cast<T>(dist(rng));
  }
}

// Fills an n x n block (row stride `ld`, starting at `block`) with an
// orthogonal matrix obtained by modified Gram-Schmidt on Gaussian draws.
template <typename T>
void orthogonal_block_init(T* block, std::size_t n, std::size_t ld, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (auto& row : rows) {
    for (double& v : row) v = dist(rng);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += rows[i][k] * rows[j][k];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= dot * rows[j][k];
    }
    double norm = 0;
    for (std::size_t k = 0; k < n; ++k) norm += rows[i][k] * rows[i][k];
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      // Degenerate draw; retry this row.
      for (double& v : rows[i]) v = dist(rng);
      --i;
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) rows[i][k] /= norm;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      block[i * ld + j] = static_cast<T>(rows[i][j]);
    }
  }
}

}  // namespace ecgdl
