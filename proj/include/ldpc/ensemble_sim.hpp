#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ldpc/ensemble_params.hpp"
#include "ldpc/exact_spectrum.hpp"
#include "ldpc/galois_field.hpp"

namespace ldpc {

/// Dense row-major matrix over GF(q), entries stored as canonical integers.
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols), data_(std::size_t{rows} * cols, 0) {}

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  FieldElement operator()(std::uint32_t r, std::uint32_t c) const { return {data_[std::size_t{r} * cols_ + c]}; }
  void set(std::uint32_t r, std::uint32_t c, FieldElement v) {
    data_[std::size_t{r} * cols_ + c] = static_cast<std::uint16_t>(v.value);
  }

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<std::uint16_t> data_;
};

/// One draw from the ensemble.
struct CodeSample {
  EnsembleParams params;
  /// Variable socket i (belonging to variable i / c) is wired to check
  /// socket permutation[i] (belonging to check permutation[i] / d).
  std::vector<std::uint32_t> permutation;
  /// Edge label for each check socket.
  std::vector<FieldElement> multipliers;
  /// (cn/d) x n; entry (j, v) is the sum of labels on the edges between
  /// check j and variable v (repeated edges are summed).
  GfMatrix parity_matrix;

  friend bool operator==(const CodeSample&, const CodeSample&) = default;
};

/// Parity-check matrix of the wiring (permutation, multipliers).
GfMatrix assemble_parity(const GaloisField& field, const EnsembleParams& params,
                         const std::vector<std::uint32_t>& permutation, const std::vector<FieldElement>& multipliers);

/// Fisher-Yates interleaver and uniform nonzero labels from Rng(seed).
CodeSample sample_code(const GaloisField& field, const EnsembleParams& params, std::uint64_t seed);
CodeSample sample_code(const EnsembleParams& params, std::uint64_t seed);

struct WeightEnumeration {
  std::vector<std::uint64_t> weights;  // A(l), l = 0..n
  std::optional<std::uint32_t> dmin;   // empty for the zero code
  std::uint32_t dim = 0;
};

struct EnumerationOptions {
  /// Largest q^dim that may be enumerated.
  std::uint64_t cap = std::uint64_t{1} << 24;
};

/// Rank and a kernel basis by Gaussian elimination over GF(q).
std::vector<std::vector<FieldElement>> kernel_basis(const GaloisField& field, const GfMatrix& h);

/// Weight distribution of ker(h) by walking all q^dim kernel vectors in
/// reflected Gray-code order. Throws CapacityError when q^dim > cap.
WeightEnumeration enumerate_weights(const GaloisField& field, const GfMatrix& h, const EnumerationOptions& options = {});

/// dmin if it is at most max_weight, found as the smallest linearly
/// dependent set of columns; empty otherwise. Cost grows as C(n, max_weight).
std::optional<std::uint32_t> min_distance_up_to(const GaloisField& field, const GfMatrix& h, std::uint32_t max_weight);

/// Parity-check matrix without an all-zero column (equivalently dmin >= 2).
bool has_no_zero_column(const GfMatrix& h);

/// Predicate on sampled codes used to condition the statistics.
using CodeFilter = std::function<bool(const GfMatrix&)>;

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct ProportionEstimate {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  double estimate = 0.0;
  double half_width = 0.0;  // 95% normal-approximation half width
};

struct MonteCarloOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint32_t l0 = 1;
  double alpha = 0.5;
  bool filter_on = false;
  CodeFilter filter = has_no_zero_column;
  /// Worker threads; 0 picks LDPC_SPECTRA_THREADS or the hardware count.
  unsigned workers = 0;
  EnumerationOptions enumeration;
};

struct SimReport {
  EnsembleParams params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t l0 = 1;
  double alpha = 0.0;
  std::uint32_t upper_weight = 0;  // floor(n alpha)
  std::vector<MeanEstimate> mean_spectrum;
  /// P{l0 <= dmin <= floor(n alpha)}.
  ProportionEstimate p_dmin_in_range;
  /// Counts of dmin = 1..n; the final entry counts zero codes.
  std::vector<std::uint64_t> dmin_histogram;
  bool filter_on = false;
  std::uint64_t filter_passes = 0;
  double filter_pass_rate = 0.0;
  std::vector<MeanEstimate> filtered_mean_spectrum;
  ProportionEstimate filtered_p_dmin_in_range;
};

/// Worker count from LDPC_SPECTRA_THREADS, else the hardware concurrency.
unsigned default_workers();

/// Trial t uses trial_seed(seed, t); results do not depend on the worker
/// count or scheduling.
SimReport monte_carlo(const EnsembleParams& params, const MonteCarloOptions& options);

/// P{dmin <= max_weight} over `trials` sampled codes (trial seeds as in
/// monte_carlo), without enumerating the codes.
ProportionEstimate small_distance_rate(const EnsembleParams& params, std::uint64_t trials, std::uint64_t seed,
                                       std::uint32_t max_weight, unsigned workers = 0);

struct ExhaustiveOptions {
  /// Largest (cn)! (q-1)^{cn} accepted.
  std::uint64_t cap = 100'000'000;
  EnumerationOptions enumeration;
};

/// Exact ensemble average over every (permutation, labels) configuration.
SpectrumTable exhaustive_ensemble(const EnsembleParams& params, const ExhaustiveOptions& options = {});

}  // namespace ldpc
