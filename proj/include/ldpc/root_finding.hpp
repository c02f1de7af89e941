#pragma once

namespace ldpc {

struct BisectOptions {
  /// Stop once the bracket is no wider than this. Zero means "run until the
  /// midpoint is no longer representable strictly inside the bracket".
  double abs_tol = 1e-12;
  int max_iter = 200;
};

/// Locates the point where a monotone predicate switches from true to false
/// on [lo, hi]: below(x) holds on [lo, root) and fails on (root, hi].
/// The endpoints themselves are never evaluated.
template <class Pred>
double bisect_transition(Pred&& below, double lo, double hi, const BisectOptions& options = {}) {
  for (int it = 0; it < options.max_iter && hi - lo > options.abs_tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (below(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace ldpc
