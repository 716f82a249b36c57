// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0

// Backend equivalence: every dispatched kernel must match the scalar
// reference to within accumulation-order rounding.

#include <doctest.h>

#include <vector>

#include "gridit/kern.hpp"
#include "gridit/rng.hpp"

using namespace gridit;

namespace {

std::vector<float> random_vec(std::size_t n, Rng& rng) {
  std::vector<float> v(n);
  for (auto& x : v) x = static_cast<float>(rng.gaussian());
  return v;
}

float max_abs_diff(const std::vector<float>& a, const std::vector<float>& b) {
  float m = 0.0f;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

float max_abs(const std::vector<float>& a) {
  float m = 0.0f;
  for (float v : a) m = std::max(m, std::abs(v));
  return m;
}

struct BackendGuard {
  kern::Backend saved;
  BackendGuard() : saved(kern::active_backend()) {}
  ~BackendGuard() { kern::set_backend(saved); }
};

}  // namespace

TEST_CASE("gemm variants match scalar reference across shapes") {
  if (!kern::cpu_has_avx2()) {
    MESSAGE("AVX2 not available; skipping backend equivalence");
    return;
  }
  BackendGuard guard;
  Rng rng(123);
  // Shapes cover micro-kernel interiors and every remainder path.
  const int shapes[][3] = {{4, 16, 8},   {64, 384, 128}, {5, 17, 3},  {1, 1, 1},
                           {7, 16, 32},  {64, 64, 32},   {33, 50, 7}, {128, 384, 64},
                           {16, 12, 128}};
  for (auto& s : shapes) {
    int m = s[0], n = s[1], k = s[2];
    CAPTURE(m);
    CAPTURE(n);
    CAPTURE(k);
    auto A = random_vec(static_cast<std::size_t>(m) * k, rng);
    auto Bnn = random_vec(static_cast<std::size_t>(k) * n, rng);
    auto Bnt = random_vec(static_cast<std::size_t>(n) * k, rng);
    auto Btn = random_vec(static_cast<std::size_t>(m) * n, rng);
    auto C0 = random_vec(static_cast<std::size_t>(m) * n, rng);

    for (bool acc : {false, true}) {
      CAPTURE(acc);
      // nn
      std::vector<float> c_ref = C0, c_simd = C0;
      kern::ref::gemm_nn(m, n, k, A.data(), Bnn.data(), c_ref.data(), acc);
      kern::set_backend(kern::Backend::avx2);
      kern::gemm_nn(m, n, k, A.data(), Bnn.data(), c_simd.data(), acc);
      float tol = 2e-4f * std::max(1.0f, max_abs(c_ref)) * std::sqrt(static_cast<float>(k));
      CHECK(max_abs_diff(c_ref, c_simd) < tol);

      // nt
      c_ref = C0;
      c_simd = C0;
      kern::ref::gemm_nt(m, n, k, A.data(), Bnt.data(), c_ref.data(), acc);
      kern::gemm_nt(m, n, k, A.data(), Bnt.data(), c_simd.data(), acc);
      tol = 2e-4f * std::max(1.0f, max_abs(c_ref)) * std::sqrt(static_cast<float>(k));
      CHECK(max_abs_diff(c_ref, c_simd) < tol);

      // tn: C is k×n, contraction over m
      std::vector<float> d0 = random_vec(static_cast<std::size_t>(k) * n, rng);
      std::vector<float> d_ref = d0, d_simd = d0;
      kern::ref::gemm_tn(m, n, k, A.data(), Btn.data(), d_ref.data(), acc);
      kern::gemm_tn(m, n, k, A.data(), Btn.data(), d_simd.data(), acc);
      tol = 2e-4f * std::max(1.0f, max_abs(d_ref)) * std::sqrt(static_cast<float>(m));
      CHECK(max_abs_diff(d_ref, d_simd) < tol);
    }
  }
}

TEST_CASE("elementwise kernels match scalar reference") {
  if (!kern::cpu_has_avx2()) return;
  BackendGuard guard;
  Rng rng(7);
  for (std::size_t n : {std::size_t(1), std::size_t(8), std::size_t(37), std::size_t(4096)}) {
    auto x = random_vec(n, rng);
    auto y0 = random_vec(n, rng);

    auto y_ref = y0, y_simd = y0;
    kern::ref::add(n, x.data(), y_ref.data());
    kern::set_backend(kern::Backend::avx2);
    kern::add(n, x.data(), y_simd.data());
    CHECK(max_abs_diff(y_ref, y_simd) == 0.0f);

    y_ref = y0;
    y_simd = y0;
    kern::ref::axpy(n, 0.37f, x.data(), y_ref.data());
    kern::axpy(n, 0.37f, x.data(), y_simd.data());
    CHECK(max_abs_diff(y_ref, y_simd) < 1e-6f);

    y_ref = y0;
    y_simd = y0;
    kern::ref::hadamard(n, x.data(), y_ref.data());
    kern::hadamard(n, x.data(), y_simd.data());
    CHECK(max_abs_diff(y_ref, y_simd) == 0.0f);

    y_ref = y0;
    y_simd = y0;
    kern::ref::scale(n, -1.25f, y_ref.data());
    kern::scale(n, -1.25f, y_simd.data());
    CHECK(max_abs_diff(y_ref, y_simd) == 0.0f);

    float d_ref = kern::ref::dot(n, x.data(), y0.data());
    float d_simd = kern::dot(n, x.data(), y0.data());
    CHECK(std::abs(d_ref - d_simd) < 1e-4f * std::max(1.0f, std::abs(d_ref)) *
                                          std::sqrt(static_cast<float>(n)));

    float s_ref = kern::ref::sum(n, x.data());
    float s_simd = kern::sum(n, x.data());
    CHECK(std::abs(s_ref - s_simd) <
          1e-5f * std::max(1.0f, max_abs(x)) * std::sqrt(static_cast<float>(n)));
  }
}

TEST_CASE("double-precision reference gemm agrees with float on small exact inputs") {
  // Small integer-valued matrices are exact in both precisions.
  int m = 3, n = 4, k = 5;
  std::vector<float> Af(m * k), Bf(k * n), Cf(m * n, 0.0f);
  std::vector<double> Ad(m * k), Bd(k * n), Cd(m * n, 0.0);
  Rng rng(99);
  for (int i = 0; i < m * k; ++i) {
    int v = rng.uniform_int(-4, 4);
    Af[i] = static_cast<float>(v);
    Ad[i] = v;
  }
  for (int i = 0; i < k * n; ++i) {
    int v = rng.uniform_int(-4, 4);
    Bf[i] = static_cast<float>(v);
    Bd[i] = v;
  }
  kern::ref::gemm_nn(m, n, k, Af.data(), Bf.data(), Cf.data(), false);
  kern::ref::gemm_nn(m, n, k, Ad.data(), Bd.data(), Cd.data(), false);
  for (int i = 0; i < m * n; ++i) CHECK(static_cast<double>(Cf[i]) == Cd[i]);
}
