// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "gridit/tensor.hpp"

namespace gridit {

// An ordered stack of frames with shared spatial dimensions, pixel values
// in [0,1], channels 1 or 3.
struct Sequence {
  std::vector<Tensor> frames;
  std::optional<double> frame_rate_hint;

  int count() const { return static_cast<int>(frames.size()); }
  void validate() const;
};

// Square grid-of-frames geometry. `k` rows/columns of elements of size
// element_h × element_w; `control_rows` is the step-1 control signal height.
struct GridLayout {
  int k = 4;
  int control_rows = 3;
  int element_h = 16;
  int element_w = 16;

  int grid_h() const { return k * element_h; }
  int grid_w() const { return k * element_w; }
  int frames_per_grid() const { return k * k; }
};

// One image packing k×k subsampled frames in row-major temporal order.
// Element (i,j) holds sequence index start_index + i*k + j.
struct GridImage {
  Tensor pixels;  // [C × k·element_h × k·element_w]
  GridLayout layout;
  int start_index = 0;
};

enum class MaskKind { step1_m, step2_m_prev, step2_m_current, step2_m_next };

// Row-wise binary mask over grid element rows; entry (i,j) applies to the
// whole pixel block of element (i,j). Within a row all entries are equal.
struct RowMask {
  Tensor values;  // [k × k], entries 0 or 1
  MaskKind kind = MaskKind::step1_m;

  float row(int i) const { return values(i, 0); }
};

struct Step2Masks {
  RowMask prev, current, next;
};

// Catmull-Rom (a = -0.5) bicubic resample with half-pixel centers and
// edge-clamped borders; output clamped to [0,1].
Tensor resample_frame(const Tensor& frame, int out_h, int out_w);

GridImage pack_grid(const std::vector<Tensor>& frames, const GridLayout& layout, int start_index);

std::vector<Tensor> unpack_grid(const GridImage& grid);
std::vector<Tensor> unpack_grid_pixels(const Tensor& pixels, int k);
Tensor pack_grid_pixels(const std::vector<Tensor>& elements, int k);

// Downsample every frame by k and pack sliding windows of k² frames.
// Window n covers sequence indices {n, ..., n+k²-1}; n advances by stride.
std::vector<GridImage> extract_training_grids(const Sequence& seq, const GridLayout& layout,
                                              int stride = 1);

// Move the last `rows` element rows to the top; remaining rows are zeroed
// (they are always masked out downstream). Block height is derived from the
// tensor, so the same op works on latent-scaled grids.
Tensor row_shift(const Tensor& grid_like, const GridLayout& layout);
Tensor row_shift(const Tensor& grid_like, const GridLayout& layout, int rows);

RowMask make_step1_mask(const GridLayout& layout);
Step2Masks make_step2_masks(const GridLayout& layout);

// out = mask ? a : b, applied per element row on grid-shaped tensors.
Tensor mask_select(const RowMask& mask, const Tensor& a, const Tensor& b, int k);
// In-place: rows where mask=1 are copied from src.
void mask_overwrite(Tensor& dst, const RowMask& mask, const Tensor& src, int k);

Tensor collapse_to_gray(const Tensor& rgb);

}  // namespace gridit
