// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridit {

// Dense row-major tensor. Float is the working precision; the double
// instantiation backs the finite-difference oracles in the test suite.
template <typename T>
struct Tens {
  std::vector<int> shape;
  std::vector<T> data;

  Tens() = default;
  explicit Tens(std::vector<int> s) : shape(std::move(s)), data(count(shape), T(0)) {}
  Tens(std::initializer_list<int> s) : Tens(std::vector<int>(s)) {}

  static std::size_t count(const std::vector<int>& s) {
    std::size_t n = 1;
    for (int d : s) {
      if (d < 0) throw std::invalid_argument("tensor dim must be non-negative");
      n *= static_cast<std::size_t>(d);
    }
    return n;
  }

  static Tens zeros(std::vector<int> s) { return Tens(std::move(s)); }
  static Tens full(std::vector<int> s, T v) {
    Tens t(std::move(s));
    std::fill(t.data.begin(), t.data.end(), v);
    return t;
  }

  std::size_t numel() const { return data.size(); }
  int dim(int i) const { return shape.at(static_cast<std::size_t>(i)); }
  int rank() const { return static_cast<int>(shape.size()); }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  T& operator()(int i) { return data[static_cast<std::size_t>(i)]; }
  T operator()(int i) const { return data[static_cast<std::size_t>(i)]; }
  T& operator()(int i, int j) {
    return data[static_cast<std::size_t>(i) * shape[1] + j];
  }
  T operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * shape[1] + j];
  }
  T& operator()(int i, int j, int k) {
    return data[(static_cast<std::size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  T operator()(int i, int j, int k) const {
    return data[(static_cast<std::size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  T& operator()(int i, int j, int k, int l) {
    return data[((static_cast<std::size_t>(i) * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }
  T operator()(int i, int j, int k, int l) const {
    return data[((static_cast<std::size_t>(i) * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }

  bool same_shape(const Tens& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (T v : data)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  template <typename U>
  Tens<U> cast() const {
    Tens<U> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

using Tensor = Tens<float>;
using TensorD = Tens<double>;

inline std::string shape_str(const std::vector<int>& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += "x";
    r += std::to_string(s[i]);
  }
  return r + "]";
}

template <typename T>
void require_same_shape(const Tens<T>& a, const Tens<T>& b, const char* what) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + shape_str(a.shape) +
                                " vs " + shape_str(b.shape));
}

template <typename T>
void require_finite(const Tens<T>& a, const char* what) {
  if (!a.all_finite())
    throw std::invalid_argument(std::string(what) + ": non-finite values in input");
}

}  // namespace gridit
