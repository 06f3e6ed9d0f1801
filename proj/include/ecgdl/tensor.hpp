#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "ecgdl/common.hpp"

namespace ecgdl {

// Dense row-major tensor. The only value type that flows through kernels.
// Carries an optional same-sized gradient buffer so parameters and their
// gradients travel together.
template <typename T>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape, T fill = T{})
      : shape_(std::move(shape)),
        data_(checked_numel(shape_), fill) {}

  Tensor(std::initializer_list<std::size_t> shape, T fill = T{})
      : Tensor(std::vector<std::size_t>(shape), fill) {}

  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t i) const { return shape_.at(i); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& values() { return data_; }
  const std::vector<T>& values() const { return data_; }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  T& operator()(std::size_t i, std::size_t j) {
    return data_[i * shape_[1] + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * shape_[1] + j];
  }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  // Reinterprets the buffer under a new shape with the same element count.
  void reshape(std::vector<std::size_t> shape) {
    if (checked_numel(shape) != data_.size()) {
      throw dimension_error("reshape changes element count");
    }
    shape_ = std::move(shape);
  }

  bool has_grad() const { return !grad_.empty(); }

  // Lazily allocates the gradient buffer, zero-filled.
  std::vector<T>& grad() {
    if (grad_.empty()) grad_.assign(data_.size(), T{});
    return grad_;
  }
  const std::vector<T>& grad() const { return grad_; }

  void zero_grad() { grad_.assign(data_.size(), T{}); }
  void drop_grad() { grad_.clear(); }

  bool all_finite() const {
    for (const T& v : data_) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  std::string shape_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(shape_[i]);
    }
    return s + ")";
  }

 private:
  static std::size_t checked_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) {
      if (d == 0) throw dimension_error("tensor dimension must be positive");
      n *= d;
    }
    return shape.empty() ? 0 : n;
  }

  std::vector<std::size_t> shape_;
  std::vector<T> data_;
  std::vector<T> grad_;
};

template <typename T>
void require_shape(const Tensor<T>& t, const std::vector<std::size_t>& shape,
                   const char* what) {
  if (t.shape() != shape) {
    throw dimension_error(std::string(what) + ": unexpected shape " +
                          t.shape_str());
  }
}

template <typename T>
void require_finite(const Tensor<T>& t, const char* what) {
  if (!t.all_finite()) {
    throw numeric_error(std::string(what) + ": non-finite values in input");
  }
}

}  // namespace ecgdl
