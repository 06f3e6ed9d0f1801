#pragma once

#include <algorithm>
#include <cmath>

#include "ecgdl/common.hpp"
#include "ecgdl/tensor.hpp"

namespace ecgdl {

enum class Activation { kRelu, kSigmoid, kTanh };

// Sigmoid with the pre-activation clamped to [-40, 40] so exp never
// overflows; output stays strictly inside (0, 1).
template <typename T>
T sigmoid_scalar(T x) {
  double v = std::clamp(static_cast<double>(x), -40.0, 40.0);
  return static_cast<T>(1.0 / (1.0 + std::exp(-v)));
}

template <typename T>
T tanh_scalar(T x) {
  return static_cast<T>(std::tanh(static_cast<double>(x)));
}

template <typename T>
struct ActivationCache {
  Activation kind{};
  Tensor<T> saved;  // input for relu, output for sigmoid/tanh
  bool used = false;
};

template <typename T>
Tensor<T> activation_forward(const Tensor<T>& x, Activation kind,
                             ActivationCache<T>* cache = nullptr) {
  Tensor<T> y = x;
  switch (kind) {
    case Activation::kRelu:
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::max(y[i], T{});
      break;
    case Activation::kSigmoid:
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = sigmoid_scalar(y[i]);
      break;
    case Activation::kTanh:
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = tanh_scalar(y[i]);
      break;
  }
  if (cache) {
    cache->kind = kind;
    cache->saved = (kind == Activation::kRelu) ? x : y;
    cache->used = false;
  }
  return y;
}

template <typename T>
Tensor<T> activation_backward(ActivationCache<T>& cache, const Tensor<T>& dy) {
  if (cache.used) throw usage_error("activation cache consumed twice");
  cache.used = true;
  if (dy.shape() != cache.saved.shape()) {
    throw dimension_error("activation backward: dY shape mismatch");
  }
  Tensor<T> dx = dy;
  switch (cache.kind) {
    case Activation::kRelu:
      for (std::size_t i = 0; i < dx.size(); ++i) {
        if (cache.saved[i] <= T{}) dx[i] = T{};
      }
      break;
    case Activation::kSigmoid:
      for (std::size_t i = 0; i < dx.size(); ++i) {
        T s = cache.saved[i];
        dx[i] *= s * (T{1} - s);
      }
      break;
    case Activation::kTanh:
      for (std::size_t i = 0; i < dx.size(); ++i) {
        T t = cache.saved[i];
        dx[i] *= T{1} - t * t;
      }
      break;
  }
  return dx;
}

}  // namespace ecgdl
