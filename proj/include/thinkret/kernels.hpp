#pragma once

// Dense numeric kernels. Row-parallel kernels come in a serial reference
// form and an OpenMP form; the two must agree bitwise because every output
// row is produced by the same arithmetic in the same order.

#include <cstddef>
#include <span>
#include <vector>

namespace thinkret {

/// Row-major dense matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Selects the serial reference or the OpenMP path of a batched kernel.
enum class ExecPolicy { kSerial, kParallel };

/// Sets the OpenMP thread count; 0 keeps the runtime default.
void set_num_threads(int n);
int max_threads();

namespace kernels {

double dot(std::span<const double> a, std::span<const double> b);

/// out[t, n] = sum_k in[t, k] * w[n, k] + bias[n]; bias may be empty.
void linear(std::span<const double> in, std::size_t rows, std::size_t in_dim,
            std::span<const double> w, std::span<const double> bias, std::size_t out_dim,
            std::span<double> out);

/// Accumulates dW += dout^T in, db += colsum(dout); writes or accumulates
/// din = dout W when din is non-empty.
void linear_backward(std::span<const double> dout, std::span<const double> in, std::size_t rows,
                     std::size_t in_dim, std::span<const double> w, std::size_t out_dim,
                     std::span<double> dw, std::span<double> db, std::span<double> din,
                     bool accumulate_din);

/// Inner products of `query` (length dim) against every row of a float32
/// matrix, accumulated in double.
namespace serial {
void inner_products(std::span<const float> rows, std::size_t dim, std::span<const double> query,
                    std::span<double> scores);
}
namespace omp {
void inner_products(std::span<const float> rows, std::size_t dim, std::span<const double> query,
                    std::span<double> scores);
}

inline void inner_products(ExecPolicy policy, std::span<const float> rows, std::size_t dim,
                           std::span<const double> query, std::span<double> scores) {
  if (policy == ExecPolicy::kParallel) {
    omp::inner_products(rows, dim, query, scores);
  } else {
    serial::inner_products(rows, dim, query, scores);
  }
}

}  // namespace kernels
}  // namespace thinkret
