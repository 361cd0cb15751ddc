#pragma once

#include <cstddef>
#include <vector>

namespace vmsim {

// Dense 3D array over phase-space nodes, row-major with the last index
// fastest: index (i, j, k) = (i * n2 + j) * n3 + k.
struct Array3 {
  int n1 = 0, n2 = 0, n3 = 0;
  std::vector<double> data;

  Array3() = default;
  Array3(int a, int b, int c) : n1(a), n2(b), n3(c), data(std::size_t(a) * b * c, 0.0) {}

  double& operator()(int i, int j, int k) {
    return data[(std::size_t(i) * n2 + j) * n3 + k];
  }
  double operator()(int i, int j, int k) const {
    return data[(std::size_t(i) * n2 + j) * n3 + k];
  }
  std::size_t size() const { return data.size(); }

  double* line_v2(int i, int j) { return &data[(std::size_t(i) * n2 + j) * n3]; }
  const double* line_v2(int i, int j) const { return &data[(std::size_t(i) * n2 + j) * n3]; }
};

}  // namespace vmsim
