#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace apsyn {

/// Domain error with a human-readable message. Thrown by validation and by
/// operations whose preconditions are violated.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rectangular dense grid of transducer elements: N columns by M rows at
/// pitches d_x, d_y, driven at a single center frequency.
///
/// Element (col, row) with 1-based indices sits at
///   x = (col - (N+1)/2) * d_x,   y = (row - (M+1)/2) * d_y
/// so the aperture is centered on the origin. The far-field pattern magnitude
/// is invariant to this global shift.
struct DenseGridSpec {
  int n_cols = 0;           // N
  int n_rows = 0;           // M
  double pitch_x_mm = 0.0;  // d_x
  double pitch_y_mm = 0.0;  // d_y
  double f0_hz = 0.0;       // center frequency
  double c_mps = 0.0;       // speed of sound

  int element_count() const { return n_cols * n_rows; }

  /// c/f0 expressed in mm.
  double wavelength_mm() const { return c_mps * 1e3 / f0_hz; }

  /// 2*pi/lambda in rad/mm.
  double wavenumber_rad_per_mm() const;

  double element_x_mm(int col) const {
    return (col - 0.5 * (n_cols + 1)) * pitch_x_mm;
  }
  double element_y_mm(int row) const {
    return (row - 0.5 * (n_rows + 1)) * pitch_y_mm;
  }

  /// Flat index of element (col, row), 1-based inputs; row index varies
  /// fastest, matching the w_{1,1}, w_{1,2}, ... ordering used throughout.
  int flat_index(int col, int row) const { return (col - 1) * n_rows + (row - 1); }

  void validate() const;  // throws Error on any bad field
};

/// Per-element nonnegative weights over the full dense grid (length N*M,
/// ordered by flat_index).
struct ApodizationVector {
  DenseGridSpec grid;
  Eigen::VectorXd weights;

  void validate() const;
};

struct Element {
  int col = 0;  // 1-based
  int row = 0;  // 1-based
  double x_mm = 0.0;
  double y_mm = 0.0;
  double weight = 1.0;
};

/// A set of active elements with positions and weights. After construction by
/// the operations below, max weight is 1 and (col, row) pairs are unique.
/// Immutable by convention; safe to share across threads.
struct ApertureLayout {
  DenseGridSpec grid;
  std::string name;
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
};

/// All N*M elements active with unit weight, centered positions.
ApertureLayout build_dense_layout(const DenseGridSpec& grid);

/// Keep the elements whose weight, normalized by max(w), is >= w_thre
/// (inclusive); retained weights are renormalized by max(w).
/// Throws Error("empty aperture") when w is identically zero.
ApertureLayout prune_by_threshold(const ApodizationVector& w, double w_thre);

/// Number of elements prune_by_threshold would keep.
int count_active(const ApodizationVector& w, double w_thre);

}  // namespace apsyn
