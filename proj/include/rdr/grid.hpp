#pragma once

#include "rdr/field.hpp"

namespace rdr {

// One-sided and second differences on the periodic grid. All operators wrap
// at the boundary, so they commute with integer shifts and their grid sums
// telescope to zero. Reductions run serially in Eigen's column-major order;
// results do not depend on any threading.

// (f[i+1] - f[i]) / h along the given axis.
template <typename Scalar>
Field2<Scalar> forward_diff(const Field2<Scalar>& f, Axis axis, double h) {
  require_nonempty(f, "forward_diff");
  require_finite(f, "forward_diff");
  if (!(h > 0.0)) throw std::invalid_argument("forward_diff: h must be > 0");
  const Eigen::Index H = f.rows(), W = f.cols();
  Field2<Scalar> out(H, W);
  if (axis == Axis::X) {
    out.leftCols(W - 1) = f.rightCols(W - 1) - f.leftCols(W - 1);
    out.col(W - 1) = f.col(0) - f.col(W - 1);
  } else {
    out.topRows(H - 1) = f.bottomRows(H - 1) - f.topRows(H - 1);
    out.row(H - 1) = f.row(0) - f.row(H - 1);
  }
  out /= h;
  return out;
}

// (f[i] - f[i-1]) / h along the given axis.
template <typename Scalar>
Field2<Scalar> backward_diff(const Field2<Scalar>& f, Axis axis, double h) {
  require_nonempty(f, "backward_diff");
  require_finite(f, "backward_diff");
  if (!(h > 0.0)) throw std::invalid_argument("backward_diff: h must be > 0");
  const Eigen::Index H = f.rows(), W = f.cols();
  Field2<Scalar> out(H, W);
  if (axis == Axis::X) {
    out.rightCols(W - 1) = f.rightCols(W - 1) - f.leftCols(W - 1);
    out.col(0) = f.col(0) - f.col(W - 1);
  } else {
    out.bottomRows(H - 1) = f.bottomRows(H - 1) - f.topRows(H - 1);
    out.row(0) = f.row(0) - f.row(H - 1);
  }
  out /= h;
  return out;
}

// Undivided second difference f[i+1] - 2 f[i] + f[i-1].
template <typename Scalar>
Field2<Scalar> second_diff(const Field2<Scalar>& f, Axis axis) {
  require_nonempty(f, "second_diff");
  require_finite(f, "second_diff");
  const Eigen::Index H = f.rows(), W = f.cols();
  Field2<Scalar> out(H, W);
  if (axis == Axis::X) {
    for (Eigen::Index x = 0; x < W; ++x) {
      const Eigen::Index xp = (x + 1) % W, xm = (x + W - 1) % W;
      out.col(x) = f.col(xp) - Scalar(2) * f.col(x) + f.col(xm);
    }
  } else {
    for (Eigen::Index y = 0; y < H; ++y) {
      const Eigen::Index yp = (y + 1) % H, ym = (y + H - 1) % H;
      out.row(y) = f.row(yp) - Scalar(2) * f.row(y) + f.row(ym);
    }
  }
  return out;
}

// Content moved by (sx, sy) with wrap-around: out(y, x) = f(y - sy, x - sx).
template <typename Scalar>
Field2<Scalar> periodic_shift(const Field2<Scalar>& f, Eigen::Index sx, Eigen::Index sy) {
  require_nonempty(f, "periodic_shift");
  const Eigen::Index H = f.rows(), W = f.cols();
  const Eigen::Index ox = ((sx % W) + W) % W;
  const Eigen::Index oy = ((sy % H) + H) % H;
  Field2<Scalar> out(H, W);
  for (Eigen::Index y = 0; y < H; ++y) {
    for (Eigen::Index x = 0; x < W; ++x) {
      out((y + oy) % H, (x + ox) % W) = f(y, x);
    }
  }
  return out;
}

inline FieldStats field_stats(const Image& f) {
  require_nonempty(f, "field_stats");
  require_finite(f, "field_stats");
  FieldStats s;
  s.min = f.minCoeff();
  s.max = f.maxCoeff();
  s.mean = f.mean();
  s.sum_squares = f.square().sum();
  return s;
}

}  // namespace rdr
