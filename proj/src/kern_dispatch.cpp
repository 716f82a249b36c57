// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0
#include "gridit/kern.hpp"

#include <cstdlib>
#include <cstring>

namespace gridit::kern {

namespace avx2_impl {
void gemm_nn(int, int, int, const float*, const float*, float*, bool);
void gemm_nt(int, int, int, const float*, const float*, float*, bool);
void gemm_tn(int, int, int, const float*, const float*, float*, bool);
void add(std::size_t, const float*, float*);
void axpy(std::size_t, float, const float*, float*);
void scale(std::size_t, float, float*);
void hadamard(std::size_t, const float*, float*);
float dot(std::size_t, const float*, const float*);
float sum(std::size_t, const float*);
}  // namespace avx2_impl

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend pick_initial_backend() {
  if (const char* env = std::getenv("GRIDIT_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
  }
#ifdef GRIDIT_HAVE_AVX2_TU
  if (cpu_has_avx2()) return Backend::avx2;
#endif
  return Backend::scalar;
}

Backend& backend_state() {
  static Backend b = pick_initial_backend();
  return b;
}

}  // namespace

Backend active_backend() { return backend_state(); }

void set_backend(Backend b) {
#ifdef GRIDIT_HAVE_AVX2_TU
  if (b == Backend::avx2 && !cpu_has_avx2()) b = Backend::scalar;
#else
  b = Backend::scalar;
#endif
  backend_state() = b;
}

const char* backend_name() {
  return backend_state() == Backend::avx2 ? "avx2" : "scalar";
}

#ifdef GRIDIT_HAVE_AVX2_TU
#define GRIDIT_DISPATCH(fn, ...)                         \
  if (backend_state() == Backend::avx2) {                \
    avx2_impl::fn(__VA_ARGS__);                          \
    return;                                              \
  }                                                      \
  ref::fn(__VA_ARGS__)
#define GRIDIT_DISPATCH_RET(fn, ...)                     \
  if (backend_state() == Backend::avx2) {                \
    return avx2_impl::fn(__VA_ARGS__);                   \
  }                                                      \
  return ref::fn(__VA_ARGS__)
#else
#define GRIDIT_DISPATCH(fn, ...) ref::fn(__VA_ARGS__)
#define GRIDIT_DISPATCH_RET(fn, ...) return ref::fn(__VA_ARGS__)
#endif

void gemm_nn(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
  GRIDIT_DISPATCH(gemm_nn, m, n, k, A, B, C, accumulate);
}
void gemm_nt(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
  GRIDIT_DISPATCH(gemm_nt, m, n, k, A, B, C, accumulate);
}
void gemm_tn(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
  GRIDIT_DISPATCH(gemm_tn, m, n, k, A, B, C, accumulate);
}
void add(std::size_t n, const float* x, float* y) { GRIDIT_DISPATCH(add, n, x, y); }
void axpy(std::size_t n, float a, const float* x, float* y) { GRIDIT_DISPATCH(axpy, n, a, x, y); }
void scale(std::size_t n, float a, float* x) { GRIDIT_DISPATCH(scale, n, a, x); }
void hadamard(std::size_t n, const float* x, float* y) { GRIDIT_DISPATCH(hadamard, n, x, y); }
float dot(std::size_t n, const float* x, const float* y) { GRIDIT_DISPATCH_RET(dot, n, x, y); }
float sum(std::size_t n, const float* x) { GRIDIT_DISPATCH_RET(sum, n, x); }

#undef GRIDIT_DISPATCH
#undef GRIDIT_DISPATCH_RET

}  // namespace gridit::kern
