#include "apsyn/geometry.hpp"

#include <cmath>
#include <numbers>

namespace apsyn {

double DenseGridSpec::wavenumber_rad_per_mm() const {
  return 2.0 * std::numbers::pi / wavelength_mm();
}

void DenseGridSpec::validate() const {
  if (n_cols < 1) throw Error("grid: n_cols must be >= 1");
  if (n_rows < 1) throw Error("grid: n_rows must be >= 1");
  if (!(pitch_x_mm > 0.0)) throw Error("grid: pitch_x_mm must be > 0");
  if (!(pitch_y_mm > 0.0)) throw Error("grid: pitch_y_mm must be > 0");
  if (!(f0_hz > 0.0)) throw Error("grid: f0_hz must be > 0");
  if (!(c_mps > 0.0)) throw Error("grid: c_mps must be > 0");
}

void ApodizationVector::validate() const {
  grid.validate();
  if (weights.size() != grid.element_count())
    throw Error("apodization: weight count does not match grid");
  if ((weights.array() < 0.0).any())
    throw Error("apodization: weights must be nonnegative");
}

ApertureLayout build_dense_layout(const DenseGridSpec& grid) {
  grid.validate();
  ApertureLayout layout;
  layout.grid = grid;
  layout.name = "dense";
  layout.elements.reserve(static_cast<std::size_t>(grid.element_count()));
  for (int col = 1; col <= grid.n_cols; ++col) {
    for (int row = 1; row <= grid.n_rows; ++row) {
      layout.elements.push_back(
          {col, row, grid.element_x_mm(col), grid.element_y_mm(row), 1.0});
    }
  }
  return layout;
}

ApertureLayout prune_by_threshold(const ApodizationVector& w, double w_thre) {
  w.validate();
  const double wmax = w.weights.maxCoeff();
  if (!(wmax > 0.0)) throw Error("empty aperture");

  ApertureLayout layout;
  layout.grid = w.grid;
  layout.name = "pruned";
  for (int col = 1; col <= w.grid.n_cols; ++col) {
    for (int row = 1; row <= w.grid.n_rows; ++row) {
      const double wn = w.weights[w.grid.flat_index(col, row)] / wmax;
      if (wn >= w_thre) {
        layout.elements.push_back(
            {col, row, w.grid.element_x_mm(col), w.grid.element_y_mm(row), wn});
      }
    }
  }
  return layout;
}

int count_active(const ApodizationVector& w, double w_thre) {
  w.validate();
  const double wmax = w.weights.maxCoeff();
  if (!(wmax > 0.0)) throw Error("empty aperture");
  int count = 0;
  for (Eigen::Index i = 0; i < w.weights.size(); ++i) {
    if (w.weights[i] / wmax >= w_thre) ++count;
  }
  return count;
}

}  // namespace apsyn
