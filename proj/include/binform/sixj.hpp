// Zero pattern of the 6j symbols {k k k; n/2 n/2 n/2}, through the integer
// sum that decides their vanishing:
//
//   S(k, n) = sum_j (-1)^j binom(j+1, 3k+1) binom(k, j-k-n)^3,
//
// supported on max(3k, k+n) <= j <= 2k+n.
#pragma once

#include "binform/exactnum.hpp"

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace binform {

/// Requires k >= 2 and n >= k; throws std::invalid_argument otherwise.
Int S(std::int64_t k, std::int64_t n);

/// All (k, n) with 2 <= k <= k_max, k <= n <= n_max and S(k, n) = 0, in
/// increasing (k, n) order.
std::vector<std::pair<std::int64_t, std::int64_t>> scan_zeros(std::int64_t k_max, std::int64_t n_max,
                                                              unsigned jobs = 1);

/// Signs of S over rows r = 1..rows and columns c = 1..cols, where cell (r, c)
/// holds sign S(r+1, r+c).  Row 1 column 1 is the top-left corner.
class SignGrid {
 public:
  SignGrid(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  static std::int64_t k_of(int r, int /*c*/) { return r + 1; }
  static std::int64_t n_of(int r, int c) { return r + c; }

  /// 1-based access.
  int at(int r, int c) const { return cells_[index(r, c)]; }
  void set(int r, int c, int sign) { cells_[index(r, c)] = static_cast<std::int8_t>(sign); }

  /// (r, c) of every zero cell, row-major.
  std::vector<std::pair<int, int>> zero_cells() const;

  bool operator==(const SignGrid&) const = default;

 private:
  std::size_t index(int r, int c) const;
  int rows_;
  int cols_;
  std::vector<std::int8_t> cells_;
};

/// Fills the grid; cells are split over `jobs` threads by row.
SignGrid sign_grid(int rows = 201, int cols = 201, unsigned jobs = 1);

/// Plain PPM: "P3\n<cols> <rows>\n255\n", then one "R G B" line per cell in
/// row-major order.  Zero is 255 255 255, positive 190 190 190, negative
/// 60 60 60.
void write_ppm(std::ostream& out, const SignGrid& grid);

/// "r,c,k,n,sign" header then one line per cell, row-major.
void write_csv(std::ostream& out, const SignGrid& grid);

}  // namespace binform
