#pragma once

#include <vector>

namespace vmsim {

/* Natural cubic spline interpolation on a uniformly spaced node line,
 * represented in the cubic B-spline basis. build() solves the tridiagonal
 * collocation system (constant pivots are cached per line length), eval()
 * is a four-tap combination on one cell.
 *
 * Shifted evaluation decomposes the shift into an integer cell count k and
 * fractional parts phi = a - k and psi = (k + 1) - a. Each part comes from a
 * single subtraction, so negating the shift swaps (phi, psi) and flips k to
 * -k - 1 bitwise. The *_symmetric variants average a forward pass with a
 * pass over the reversed line, which makes the result commute exactly with
 * reversal of data and feet; the plain variants are single-pass.
 *
 * A shift with phi == 0 short-circuits to an index copy, so integer-cell
 * shifts of compactly supported data are exact. Feet outside the node range
 * read as zero. */
struct SplineWorkspace {
  std::vector<double> coeff;   // c[-1 .. N+1], offset by one
  std::vector<double> rhs;
  std::vector<double> invp;    // cached Thomas pivots
  int cached_nodes = -1;

  void build(const double* f, int n_nodes);
  // value on cell `cell` at local coordinate t (s is the complement of t);
  // out-of-range cells read as zero
  double eval(int cell, int n_nodes, double t, double s) const;
};

// out[i] = spline value at node position i - shift_cells
void advect_line(const double* f, int n_nodes, double shift_cells,
                 double* out, SplineWorkspace& ws);
void advect_line_symmetric(const double* f, int n_nodes, double shift_cells,
                           double* out, SplineWorkspace& ws);

// per-node feet: out[i] = spline value at node position i - shift_cells[i]
void advect_line_feet(const double* f, int n_nodes, const double* shift_cells,
                      double* out, SplineWorkspace& ws);
void advect_line_feet_symmetric(const double* f, int n_nodes,
                                const double* shift_cells, double* out,
                                SplineWorkspace& ws);

// profile sampled on uniform nodes, shifted by `shift` in physical units
std::vector<double> interpolate_1d(const std::vector<double>& profile,
                                   double shift, double spacing);

// standalone coefficient array (layout as in SplineWorkspace::coeff) and
// point evaluation at node-unit coordinate u in [0, n_nodes - 1]
std::vector<double> spline_coefficients(const std::vector<double>& f);
double spline_eval(const std::vector<double>& coeff, int n_nodes, double u);

}  // namespace vmsim
