#ifndef IFD_BATCH_HPP
#define IFD_BATCH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ifd/expr.hpp"
#include "ifd/transform.hpp"

namespace ifd {

// n_points >= 2 values from lo to hi inclusive, uniformly spaced.
std::vector<double> linspace(double lo, double hi, std::size_t n_points);

// Each kernel below comes in an OpenMP-parallel flavor and a plain serial
// twin. Every output element is a pure function of its own index, so the
// two flavors agree bit for bit; the serial twins are the reference the
// test suite and the benchmark compare against.

std::vector<double> eval_grid(const ExprPtr& e, const std::vector<double>& ts);
std::vector<double> eval_grid_serial(const ExprPtr& e, const std::vector<double>& ts);

std::vector<double> density_series(const ImplicitDensity& d, const std::vector<double>& ts);
std::vector<double> density_series_serial(const ImplicitDensity& d,
                                          const std::vector<double>& ts);

std::vector<double> cdf_series(const ImplicitDensity& d, const std::vector<double>& ts);
std::vector<double> cdf_series_serial(const ImplicitDensity& d, const std::vector<double>& ts);

// n draws from the law of X, in draw order: the uniform variates come
// from a single serial splitmix64 stream regardless of thread count, and
// only the f(X)=A root solves are parallelized. Identical output to
// sample_batch_serial, which itself reproduces n calls of
// ImplicitDensity::sample on a fresh RngState{seed}.
std::vector<double> sample_batch(const ImplicitDensity& d, std::size_t n, std::uint64_t seed);
std::vector<double> sample_batch_serial(const ImplicitDensity& d, std::size_t n,
                                        std::uint64_t seed);

} // namespace ifd

#endif
