#include "ldpc/ensemble_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "ldpc/errors.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

GfMatrix assemble_parity(const GaloisField& field, const EnsembleParams& params,
                         const std::vector<std::uint32_t>& permutation, const std::vector<FieldElement>& multipliers) {
  const std::uint32_t cn = params.sockets();
  if (permutation.size() != cn || multipliers.size() != cn) {
    throw ParameterError("wiring must have cn = " + std::to_string(cn) + " entries");
  }
  GfMatrix h(params.checks(), params.n);
  for (std::uint32_t i = 0; i < cn; ++i) {
    const std::uint32_t v = i / params.c;
    const std::uint32_t socket = permutation[i];
    const std::uint32_t check = socket / params.d;
    h.set(check, v, field.add(h(check, v), multipliers[socket]));
  }
  return h;
}

CodeSample sample_code(const GaloisField& field, const EnsembleParams& params, std::uint64_t seed) {
  params.validate();
  if (field.order() != params.q) throw ParameterError("field order does not match q");
  Rng rng(seed);
  const std::uint32_t cn = params.sockets();
  CodeSample sample;
  sample.params = params;
  sample.permutation.resize(cn);
  std::iota(sample.permutation.begin(), sample.permutation.end(), 0u);
  for (std::uint32_t i = cn; i-- > 1;) {
    const auto j = static_cast<std::uint32_t>(rng.below(std::uint64_t{i} + 1));
    std::swap(sample.permutation[i], sample.permutation[j]);
  }
  sample.multipliers.resize(cn);
  for (auto& m : sample.multipliers) m = {static_cast<std::uint32_t>(1 + rng.below(params.q - 1))};
  sample.parity_matrix = assemble_parity(field, params, sample.permutation, sample.multipliers);
  return sample;
}

CodeSample sample_code(const EnsembleParams& params, std::uint64_t seed) {
  params.validate();
  return sample_code(GaloisField(params.q), params, seed);
}

std::vector<std::vector<FieldElement>> kernel_basis(const GaloisField& field, const GfMatrix& h) {
  const std::uint32_t rows = h.rows();
  const std::uint32_t cols = h.cols();
  std::vector<std::vector<FieldElement>> a(rows, std::vector<FieldElement>(cols));
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) a[r][c] = h(r, c);

  // Reduced row echelon form.
  std::vector<std::uint32_t> pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < cols && rank < rows; ++c) {
    std::uint32_t sel = rank;
    while (sel < rows && a[sel][c].value == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const FieldElement scale = field.inv(a[rank][c]);
    for (auto& e : a[rank]) e = field.mul(e, scale);
    for (std::uint32_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].value == 0) continue;
      const FieldElement f = a[r][c];
      for (std::uint32_t k = 0; k < cols; ++k) a[r][k] = field.sub(a[r][k], field.mul(f, a[rank][k]));
    }
    pivot_cols.push_back(c);
    is_pivot[c] = true;
    ++rank;
  }

  std::vector<std::vector<FieldElement>> basis;
  for (std::uint32_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> v(cols);
    v[f] = field.one();
    for (std::uint32_t r = 0; r < rank; ++r) v[pivot_cols[r]] = field.neg(a[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

WeightEnumeration enumerate_weights(const GaloisField& field, const GfMatrix& h, const EnumerationOptions& options) {
  const std::uint32_t n = h.cols();
  const auto basis = kernel_basis(field, h);
  const std::uint32_t q = field.order();
  const auto dim = static_cast<std::uint32_t>(basis.size());

  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (total > options.cap / q) {
      throw CapacityError("enumeration of q^dim = " + std::to_string(q) + "^" + std::to_string(dim) +
                          " codewords exceeds the cap of " + std::to_string(options.cap));
    }
    total *= q;
  }

  struct Entry {
    std::uint32_t pos;
    FieldElement value;
  };
  std::vector<std::vector<Entry>> support(dim);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (basis[i][j].value != 0) support[i].push_back({j, basis[i][j]});

  WeightEnumeration out;
  out.dim = dim;
  out.weights.assign(std::size_t{n} + 1, 0);
  std::vector<FieldElement> word(n);
  std::uint32_t weight = 0;
  out.weights[0] = 1;

  // Reflected mixed-radix Gray code: each step moves one digit by +-1.
  std::vector<std::uint32_t> digit(dim, 0);
  std::vector<int> dir(dim, 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    std::uint32_t i = 0;
    while (true) {
      const long long next = static_cast<long long>(digit[i]) + dir[i];
      if (next >= 0 && next < static_cast<long long>(q)) break;
      dir[i] = -dir[i];
      ++i;
    }
    const FieldElement old_digit{digit[i]};
    digit[i] = static_cast<std::uint32_t>(static_cast<long long>(digit[i]) + dir[i]);
    const FieldElement delta = field.sub(FieldElement{digit[i]}, old_digit);
    for (const Entry& e : support[i]) {
      const bool was_zero = word[e.pos].value == 0;
      word[e.pos] = field.add(word[e.pos], field.mul(delta, e.value));
      const bool now_zero = word[e.pos].value == 0;
      if (was_zero && !now_zero) ++weight;
      if (!was_zero && now_zero) --weight;
    }
    ++out.weights[weight];
  }

  for (std::uint32_t l = 1; l <= n; ++l) {
    if (out.weights[l] > 0) {
      out.dmin = l;
      break;
    }
  }
  return out;
}

namespace {

ProportionEstimate make_proportion(std::uint64_t hits, std::uint64_t total) {
  ProportionEstimate p;
  p.hits = hits;
  p.total = total;
  if (total == 0) return p;
  p.estimate = static_cast<double>(hits) / static_cast<double>(total);
  p.half_width = 1.96 * std::sqrt(p.estimate * (1.0 - p.estimate) / static_cast<double>(total));
  return p;
}

// Rank of the chosen columns of h.
std::uint32_t column_rank(const GaloisField& field, const GfMatrix& h, const std::vector<std::uint32_t>& cols) {
  std::vector<std::vector<FieldElement>> a(cols.size(), std::vector<FieldElement>(h.rows()));
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::uint32_t r = 0; r < h.rows(); ++r) a[i][r] = h(r, cols[i]);
  std::uint32_t rank = 0;
  for (std::uint32_t r = 0; r < h.rows() && rank < a.size(); ++r) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][r].value == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[rank]);
    const FieldElement inv = field.inv(a[rank][r]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][r].value == 0) continue;
      const FieldElement f = field.mul(a[i][r], inv);
      for (std::uint32_t k = r; k < h.rows(); ++k) a[i][k] = field.sub(a[i][k], field.mul(f, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<std::uint32_t> min_distance_up_to(const GaloisField& field, const GfMatrix& h,
                                                std::uint32_t max_weight) {
  const std::uint32_t n = h.cols();
  for (std::uint32_t k = 1; k <= std::min(max_weight, n); ++k) {
    // Walk all k-subsets in lexicographic order.
    std::vector<std::uint32_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0u);
    while (true) {
      if (column_rank(field, h, pick) < k) return k;
      std::uint32_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::uint32_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool has_no_zero_column(const GfMatrix& h) {
  for (std::uint32_t c = 0; c < h.cols(); ++c) {
    bool zero = true;
    for (std::uint32_t r = 0; r < h.rows() && zero; ++r) zero = h(r, c).value == 0;
    if (zero) return false;
  }
  return true;
}

namespace {

std::optional<unsigned> env_thread_cap() {
  const char* env = std::getenv("LDPC_SPECTRA_THREADS");
  if (env == nullptr) return std::nullopt;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap < 1) return std::nullopt;
  return static_cast<unsigned>(std::min<long>(cap, 1024));
}

}  // namespace

unsigned default_workers() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto cap = env_thread_cap();
  return cap ? std::min(hw, *cap) : hw;
}

namespace {

struct Moments {
  std::uint64_t count = 0;
  std::uint64_t hits = 0;
  std::vector<std::uint64_t> sum;
  std::vector<mpz_class> sumsq;

  explicit Moments(std::uint32_t n) : sum(std::size_t{n} + 1, 0), sumsq(std::size_t{n} + 1, 0) {}

  void add(const std::vector<std::uint64_t>& a, bool hit) {
    ++count;
    if (hit) ++hits;
    for (std::size_t l = 0; l < a.size(); ++l) {
      sum[l] += a[l];
      mpz_class v = static_cast<unsigned long>(a[l]);
      sumsq[l] += v * v;
    }
  }

  void merge(const Moments& o) {
    count += o.count;
    hits += o.hits;
    for (std::size_t l = 0; l < sum.size(); ++l) {
      sum[l] += o.sum[l];
      sumsq[l] += o.sumsq[l];
    }
  }

  std::vector<MeanEstimate> means() const {
    std::vector<MeanEstimate> out;
    if (count == 0) return out;
    const mpz_class t = static_cast<unsigned long>(count);
    for (std::size_t l = 0; l < sum.size(); ++l) {
      const mpz_class s = static_cast<unsigned long>(sum[l]);
      MeanEstimate e;
      e.mean = mpq_class(s, t).get_d();
      if (count > 1) {
        // Squared standard error of the mean, exact up to the final sqrt.
        mpq_class var(t * sumsq[l] - s * s, t * t * (t - 1));
        var.canonicalize();
        e.std_error = std::sqrt(var.get_d());
      }
      out.push_back(e);
    }
    return out;
  }

  ProportionEstimate proportion() const { return make_proportion(hits, count); }
};

struct Accumulator {
  Moments all;
  Moments filtered;
  std::vector<std::uint64_t> histogram;

  explicit Accumulator(std::uint32_t n) : all(n), filtered(n), histogram(std::size_t{n} + 1, 0) {}

  void merge(const Accumulator& o) {
    all.merge(o.all);
    filtered.merge(o.filtered);
    for (std::size_t i = 0; i < histogram.size(); ++i) histogram[i] += o.histogram[i];
  }
};

}  // namespace

SimReport monte_carlo(const EnsembleParams& params, const MonteCarloOptions& options) {
  params.validate();
  if (options.trials < 1) throw ParameterError("trials must be >= 1");
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (options.l0 < 1) throw ParameterError("l0 must be >= 1");
  if (options.filter_on && !options.filter) throw ParameterError("filter_on requires a filter");

  const GaloisField field(params.q);
  const std::uint32_t n = params.n;
  // Guard against n * alpha landing just below an integer in floating point.
  const auto upper = static_cast<std::uint32_t>(std::floor(n * options.alpha + 1e-9));

  unsigned workers = options.workers == 0 ? default_workers() : options.workers;
  if (const auto cap = env_thread_cap()) workers = std::min(workers, *cap);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, options.trials));

  std::vector<Accumulator> partial(workers, Accumulator(n));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      Accumulator& acc = partial[w];
      for (std::uint64_t t = w; t < options.trials; t += workers) {
        const CodeSample s = sample_code(field, params, trial_seed(options.seed, t));
        const WeightEnumeration e = enumerate_weights(field, s.parity_matrix, options.enumeration);
        const bool hit = e.dmin && *e.dmin >= options.l0 && *e.dmin <= upper;
        acc.all.add(e.weights, hit);
        ++acc.histogram[e.dmin ? *e.dmin - 1 : n];
        if (options.filter_on && options.filter(s.parity_matrix)) acc.filtered.add(e.weights, hit);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Accumulator total(n);
  for (const auto& p : partial) total.merge(p);

  SimReport report;
  report.params = params;
  report.trials = options.trials;
  report.seed = options.seed;
  report.l0 = options.l0;
  report.alpha = options.alpha;
  report.upper_weight = upper;
  report.mean_spectrum = total.all.means();
  report.p_dmin_in_range = total.all.proportion();
  report.dmin_histogram = total.histogram;
  report.filter_on = options.filter_on;
  if (options.filter_on) {
    report.filter_passes = total.filtered.count;
    report.filter_pass_rate = static_cast<double>(total.filtered.count) / static_cast<double>(options.trials);
    report.filtered_mean_spectrum = total.filtered.means();
    report.filtered_p_dmin_in_range = total.filtered.proportion();
  }
  return report;
}

ProportionEstimate small_distance_rate(const EnsembleParams& params, std::uint64_t trials, std::uint64_t seed,
                                       std::uint32_t max_weight, unsigned workers) {
  params.validate();
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (max_weight < 1) throw ParameterError("max_weight must be >= 1");
  const GaloisField field(params.q);
  if (workers == 0) workers = default_workers();
  if (const auto cap = env_thread_cap()) workers = std::min(workers, *cap);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  std::vector<std::uint64_t> hits(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t t = w; t < trials; t += workers) {
        const CodeSample s = sample_code(field, params, trial_seed(seed, t));
        if (min_distance_up_to(field, s.parity_matrix, max_weight)) ++hits[w];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  return make_proportion(std::accumulate(hits.begin(), hits.end(), std::uint64_t{0}), trials);
}

SpectrumTable exhaustive_ensemble(const EnsembleParams& params, const ExhaustiveOptions& options) {
  params.validate();
  const std::uint32_t cn = params.sockets();
  mpz_class configs;
  mpz_fac_ui(configs.get_mpz_t(), cn);
  mpz_class labelings;
  mpz_ui_pow_ui(labelings.get_mpz_t(), params.q - 1, cn);
  configs *= labelings;
  if (configs > mpz_class(static_cast<unsigned long>(options.cap))) {
    throw CapacityError("(cn)! (q-1)^cn = " + configs.get_str() + " configurations exceed the cap of " +
                        std::to_string(options.cap));
  }

  const GaloisField field(params.q);
  std::vector<mpz_class> sums(std::size_t{params.n} + 1, 0);
  std::vector<std::uint32_t> perm(cn);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<FieldElement> labels(cn);
  do {
    for (auto& m : labels) m = field.one();
    while (true) {
      const GfMatrix h = assemble_parity(field, params, perm, labels);
      const WeightEnumeration e = enumerate_weights(field, h, options.enumeration);
      for (std::size_t l = 0; l < sums.size(); ++l) sums[l] += static_cast<unsigned long>(e.weights[l]);
      // Odometer over nonzero labels.
      std::uint32_t k = 0;
      while (k < cn && labels[k].value == params.q - 1) labels[k++] = field.one();
      if (k == cn) break;
      ++labels[k].value;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  SpectrumTable table;
  table.params = params;
  for (const auto& s : sums) {
    mpq_class v(s, configs);
    v.canonicalize();
    table.values.push_back(v);
  }
  return table;
}

}  // namespace ldpc
