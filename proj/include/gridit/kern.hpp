// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <type_traits>

namespace gridit::kern {

// Runtime-dispatched arithmetic kernels. Scalar reference implementations are
// templated (and double-capable, which the gradient-check oracles rely on);
// the float entry points route to the active backend. AVX2 variants are
// selected at startup when the CPU supports them, or forced off with
// GRIDIT_SIMD=scalar. Backends must agree with the references to within
// accumulation-order rounding; the equivalence tests pin that down.

enum class Backend { scalar, avx2 };

Backend active_backend();
void set_backend(Backend b);  // test hook; silently keeps scalar if unsupported
const char* backend_name();
bool cpu_has_avx2();

// ---- float fast path (dispatched) ----
// gemm_nn: C[m×n] (+)= A[m×k] · B[k×n]
// gemm_nt: C[m×n] (+)= A[m×k] · B[n×k]ᵀ
// gemm_tn: C[k×n] (+)= A[m×k]ᵀ · B[m×n]
void gemm_nn(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate);
void gemm_nt(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate);
void gemm_tn(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate);
void add(std::size_t n, const float* x, float* y);            // y += x
void axpy(std::size_t n, float a, const float* x, float* y);  // y += a·x
void scale(std::size_t n, float a, float* x);
void hadamard(std::size_t n, const float* x, float* y);  // y *= x
float dot(std::size_t n, const float* x, const float* y);
float sum(std::size_t n, const float* x);

// ---- scalar references (any T) ----
namespace ref {

template <typename T>
void gemm_nn(int m, int n, int k, const T* A, const T* B, T* C, bool accumulate) {
  for (int i = 0; i < m; ++i) {
    T* c = C + static_cast<std::size_t>(i) * n;
    if (!accumulate)
      for (int j = 0; j < n; ++j) c[j] = T(0);
    const T* a = A + static_cast<std::size_t>(i) * k;
    for (int p = 0; p < k; ++p) {
      T av = a[p];
      const T* b = B + static_cast<std::size_t>(p) * n;
      for (int j = 0; j < n; ++j) c[j] += av * b[j];
    }
  }
}

template <typename T>
void gemm_nt(int m, int n, int k, const T* A, const T* B, T* C, bool accumulate) {
  for (int i = 0; i < m; ++i) {
    const T* a = A + static_cast<std::size_t>(i) * k;
    T* c = C + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const T* b = B + static_cast<std::size_t>(j) * k;
      T acc = T(0);
      for (int p = 0; p < k; ++p) acc += a[p] * b[p];
      c[j] = accumulate ? c[j] + acc : acc;
    }
  }
}

template <typename T>
void gemm_tn(int m, int n, int k, const T* A, const T* B, T* C, bool accumulate) {
  if (!accumulate)
    for (std::size_t i = 0; i < static_cast<std::size_t>(k) * n; ++i) C[i] = T(0);
  for (int r = 0; r < m; ++r) {
    const T* a = A + static_cast<std::size_t>(r) * k;
    const T* b = B + static_cast<std::size_t>(r) * n;
    for (int i = 0; i < k; ++i) {
      T av = a[i];
      T* c = C + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) c[j] += av * b[j];
    }
  }
}

template <typename T>
void add(std::size_t n, const T* x, T* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

template <typename T>
void axpy(std::size_t n, T a, const T* x, T* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
void scale(std::size_t n, T a, T* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

template <typename T>
void hadamard(std::size_t n, const T* x, T* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= x[i];
}

template <typename T>
T dot(std::size_t n, const T* x, const T* y) {
  T acc = T(0);
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

template <typename T>
T sum(std::size_t n, const T* x) {
  T acc = T(0);
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

}  // namespace ref

// ---- generic entry points: float dispatches, other types use the reference ----

template <typename T>
void gemm_nn_g(int m, int n, int k, const T* A, const T* B, T* C, bool accumulate) {
  if constexpr (std::is_same_v<T, float>)
    gemm_nn(m, n, k, A, B, C, accumulate);
  else
    ref::gemm_nn(m, n, k, A, B, C, accumulate);
}

template <typename T>
void gemm_nt_g(int m, int n, int k, const T* A, const T* B, T* C, bool accumulate) {
  if constexpr (std::is_same_v<T, float>)
    gemm_nt(m, n, k, A, B, C, accumulate);
  else
    ref::gemm_nt(m, n, k, A, B, C, accumulate);
}

template <typename T>
void gemm_tn_g(int m, int n, int k, const T* A, const T* B, T* C, bool accumulate) {
  if constexpr (std::is_same_v<T, float>)
    gemm_tn(m, n, k, A, B, C, accumulate);
  else
    ref::gemm_tn(m, n, k, A, B, C, accumulate);
}

template <typename T>
void add_g(std::size_t n, const T* x, T* y) {
  if constexpr (std::is_same_v<T, float>)
    add(n, x, y);
  else
    ref::add(n, x, y);
}

template <typename T>
void axpy_g(std::size_t n, T a, const T* x, T* y) {
  if constexpr (std::is_same_v<T, float>)
    axpy(n, a, x, y);
  else
    ref::axpy(n, a, x, y);
}

template <typename T>
void scale_g(std::size_t n, T a, T* x) {
  if constexpr (std::is_same_v<T, float>)
    scale(n, a, x);
  else
    ref::scale(n, a, x);
}

template <typename T>
void hadamard_g(std::size_t n, const T* x, T* y) {
  if constexpr (std::is_same_v<T, float>)
    hadamard(n, x, y);
  else
    ref::hadamard(n, x, y);
}

}  // namespace gridit::kern
