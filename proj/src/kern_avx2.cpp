// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; the dispatcher only routes here after a runtime CPU check.

#include "gridit/kern.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace gridit::kern::avx2_impl {

namespace {

inline float hsum8(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  lo = _mm_hadd_ps(lo, lo);
  lo = _mm_hadd_ps(lo, lo);
  return _mm_cvtss_f32(lo);
}

// C tile [4×16] (+)= A[4×k] · B[k×16]. astride is the stride between the
// four A scalars of one k-slice (k for row-major A, 1 for transposed access).
inline void tile_4x16(int k, const float* a0, const float* a1, const float* a2, const float* a3,
                      std::size_t astep, const float* B, std::size_t bstride, float* C,
                      std::size_t cstride, bool accumulate) {
  __m256 c00, c01, c10, c11, c20, c21, c30, c31;
  c00 = c01 = c10 = c11 = c20 = c21 = c30 = c31 = _mm256_setzero_ps();
  for (int p = 0; p < k; ++p) {
    __m256 b0 = _mm256_loadu_ps(B + p * bstride);
    __m256 b1 = _mm256_loadu_ps(B + p * bstride + 8);
    __m256 a;
    a = _mm256_set1_ps(a0[p * astep]);
    c00 = _mm256_fmadd_ps(a, b0, c00);
    c01 = _mm256_fmadd_ps(a, b1, c01);
    a = _mm256_set1_ps(a1[p * astep]);
    c10 = _mm256_fmadd_ps(a, b0, c10);
    c11 = _mm256_fmadd_ps(a, b1, c11);
    a = _mm256_set1_ps(a2[p * astep]);
    c20 = _mm256_fmadd_ps(a, b0, c20);
    c21 = _mm256_fmadd_ps(a, b1, c21);
    a = _mm256_set1_ps(a3[p * astep]);
    c30 = _mm256_fmadd_ps(a, b0, c30);
    c31 = _mm256_fmadd_ps(a, b1, c31);
  }
  float* c0 = C;
  float* c1 = C + cstride;
  float* c2 = C + 2 * cstride;
  float* c3 = C + 3 * cstride;
  if (accumulate) {
    c00 = _mm256_add_ps(c00, _mm256_loadu_ps(c0));
    c01 = _mm256_add_ps(c01, _mm256_loadu_ps(c0 + 8));
    c10 = _mm256_add_ps(c10, _mm256_loadu_ps(c1));
    c11 = _mm256_add_ps(c11, _mm256_loadu_ps(c1 + 8));
    c20 = _mm256_add_ps(c20, _mm256_loadu_ps(c2));
    c21 = _mm256_add_ps(c21, _mm256_loadu_ps(c2 + 8));
    c30 = _mm256_add_ps(c30, _mm256_loadu_ps(c3));
    c31 = _mm256_add_ps(c31, _mm256_loadu_ps(c3 + 8));
  }
  _mm256_storeu_ps(c0, c00);
  _mm256_storeu_ps(c0 + 8, c01);
  _mm256_storeu_ps(c1, c10);
  _mm256_storeu_ps(c1 + 8, c11);
  _mm256_storeu_ps(c2, c20);
  _mm256_storeu_ps(c2 + 8, c21);
  _mm256_storeu_ps(c3, c30);
  _mm256_storeu_ps(c3 + 8, c31);
}

inline void tile_1x16(int k, const float* a, std::size_t astep, const float* B,
                      std::size_t bstride, float* C, bool accumulate) {
  __m256 c0 = _mm256_setzero_ps(), c1 = _mm256_setzero_ps();
  for (int p = 0; p < k; ++p) {
    __m256 av = _mm256_set1_ps(a[p * astep]);
    c0 = _mm256_fmadd_ps(av, _mm256_loadu_ps(B + p * bstride), c0);
    c1 = _mm256_fmadd_ps(av, _mm256_loadu_ps(B + p * bstride + 8), c1);
  }
  if (accumulate) {
    c0 = _mm256_add_ps(c0, _mm256_loadu_ps(C));
    c1 = _mm256_add_ps(c1, _mm256_loadu_ps(C + 8));
  }
  _mm256_storeu_ps(C, c0);
  _mm256_storeu_ps(C + 8, c1);
}

// Column tail handled in plain scalar code.
inline void tail_cols_nn(int m, int n, int k, int j0, const float* A, const float* B, float* C,
                         bool accumulate) {
  for (int i = 0; i < m; ++i) {
    const float* a = A + static_cast<std::size_t>(i) * k;
    float* c = C + static_cast<std::size_t>(i) * n;
    for (int j = j0; j < n; ++j) {
      float acc = accumulate ? c[j] : 0.0f;
      for (int p = 0; p < k; ++p) acc += a[p] * B[static_cast<std::size_t>(p) * n + j];
      c[j] = acc;
    }
  }
}

}  // namespace

void gemm_nn(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
  const int nb = n & ~15;
  for (int j = 0; j < nb; j += 16) {
    int i = 0;
    for (; i + 4 <= m; i += 4) {
      const float* a0 = A + static_cast<std::size_t>(i) * k;
      tile_4x16(k, a0, a0 + k, a0 + 2 * k, a0 + 3 * k, 1, B + j, n,
                C + static_cast<std::size_t>(i) * n + j, n, accumulate);
    }
    for (; i < m; ++i)
      tile_1x16(k, A + static_cast<std::size_t>(i) * k, 1, B + j, n,
                C + static_cast<std::size_t>(i) * n + j, accumulate);
  }
  if (nb < n) tail_cols_nn(m, n, k, nb, A, B, C, accumulate);
}

void gemm_tn(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
  // C[k×n] = A[m×k]ᵀ·B[m×n]: same tiling as gemm_nn with A walked column-wise.
  const int nb = n & ~15;
  for (int j = 0; j < nb; j += 16) {
    int i = 0;
    for (; i + 4 <= k; i += 4) {
      const float* a0 = A + i;  // A[p*k + i], step k
      tile_4x16(m, a0, a0 + 1, a0 + 2, a0 + 3, static_cast<std::size_t>(k), B + j, n,
                C + static_cast<std::size_t>(i) * n + j, n, accumulate);
    }
    for (; i < k; ++i)
      tile_1x16(m, A + i, static_cast<std::size_t>(k), B + j, n,
                C + static_cast<std::size_t>(i) * n + j, accumulate);
  }
  if (nb < n) {
    for (int i = 0; i < k; ++i) {
      float* c = C + static_cast<std::size_t>(i) * n;
      for (int j = nb; j < n; ++j) {
        float acc = accumulate ? c[j] : 0.0f;
        for (int p = 0; p < m; ++p)
          acc += A[static_cast<std::size_t>(p) * k + i] * B[static_cast<std::size_t>(p) * n + j];
        c[j] = acc;
      }
    }
  }
}

void gemm_nt(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
  const int kb = k & ~7;
  for (int i = 0; i < m; ++i) {
    const float* a = A + static_cast<std::size_t>(i) * k;
    float* c = C + static_cast<std::size_t>(i) * n;
    int j = 0;
    for (; j + 4 <= n; j += 4) {
      const float* b0 = B + static_cast<std::size_t>(j) * k;
      const float* b1 = b0 + k;
      const float* b2 = b1 + k;
      const float* b3 = b2 + k;
      __m256 s0 = _mm256_setzero_ps(), s1 = _mm256_setzero_ps();
      __m256 s2 = _mm256_setzero_ps(), s3 = _mm256_setzero_ps();
      for (int p = 0; p < kb; p += 8) {
        __m256 av = _mm256_loadu_ps(a + p);
        s0 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b0 + p), s0);
        s1 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b1 + p), s1);
        s2 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b2 + p), s2);
        s3 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b3 + p), s3);
      }
      float r0 = hsum8(s0), r1 = hsum8(s1), r2 = hsum8(s2), r3 = hsum8(s3);
      for (int p = kb; p < k; ++p) {
        r0 += a[p] * b0[p];
        r1 += a[p] * b1[p];
        r2 += a[p] * b2[p];
        r3 += a[p] * b3[p];
      }
      if (accumulate) {
        c[j] += r0;
        c[j + 1] += r1;
        c[j + 2] += r2;
        c[j + 3] += r3;
      } else {
        c[j] = r0;
        c[j + 1] = r1;
        c[j + 2] = r2;
        c[j + 3] = r3;
      }
    }
    for (; j < n; ++j) {
      const float* b = B + static_cast<std::size_t>(j) * k;
      __m256 s = _mm256_setzero_ps();
      for (int p = 0; p < kb; p += 8)
        s = _mm256_fmadd_ps(_mm256_loadu_ps(a + p), _mm256_loadu_ps(b + p), s);
      float r = hsum8(s);
      for (int p = kb; p < k; ++p) r += a[p] * b[p];
      c[j] = accumulate ? c[j] + r : r;
    }
  }
}

void add(std::size_t n, const float* x, float* y) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(y + i, _mm256_add_ps(_mm256_loadu_ps(y + i), _mm256_loadu_ps(x + i)));
  for (; i < n; ++i) y[i] += x[i];
}

void axpy(std::size_t n, float a, const float* x, float* y) {
  __m256 av = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(y + i, _mm256_fmadd_ps(av, _mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(std::size_t n, float a, float* x) {
  __m256 av = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(x + i, _mm256_mul_ps(av, _mm256_loadu_ps(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void hadamard(std::size_t n, const float* x, float* y) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(y + i, _mm256_mul_ps(_mm256_loadu_ps(y + i), _mm256_loadu_ps(x + i)));
  for (; i < n; ++i) y[i] *= x[i];
}

float dot(std::size_t n, const float* x, const float* y) {
  __m256 s = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    s = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), s);
  float r = hsum8(s);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

float sum(std::size_t n, const float* x) {
  __m256 s = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) s = _mm256_add_ps(s, _mm256_loadu_ps(x + i));
  float r = hsum8(s);
  for (; i < n; ++i) r += x[i];
  return r;
}

}  // namespace gridit::kern::avx2_impl

#endif  // __AVX2__ && __FMA__
