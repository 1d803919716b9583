#include "fdd/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "fdd/specfun.hpp"

namespace fdd::numerics {

namespace {

GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const int q = (int)diag.size();
  GaussRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);  // ascending
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

// one adaptive segment: 15 point value with a 7 point companion for the
// error estimate (22 evaluations per segment, all interior)
struct Segment {
  double a, b, value, err;
};

Segment evaluate_segment(const std::function<double(double)>& f, double a, double b,
                         long& evaluations) {
  const GaussRule& g15 = support::gauss_legendre_rule(15);
  const GaussRule& g7 = support::gauss_legendre_rule(7);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double v15 = 0.0, v7 = 0.0;
  for (int i = 0; i < 15; ++i) v15 += g15.weights[i] * f(mid + half * g15.nodes[i]);
  for (int i = 0; i < 7; ++i) v7 += g7.weights[i] * f(mid + half * g7.nodes[i]);
  v15 *= half;
  v7 *= half;
  evaluations += 22;
  return {a, b, v15, std::fabs(v15 - v7)};
}

struct WorstFirst {
  bool operator()(const Segment& x, const Segment& y) const { return x.err < y.err; }
};

QuadratureResult adaptive_core(const std::function<double(double)>& f, double a, double b,
                               const Tolerance& tol) {
  long evaluations = 0;
  std::priority_queue<Segment, std::vector<Segment>, WorstFirst> heap;
  Segment first = evaluate_segment(f, a, b, evaluations);
  if (!std::isfinite(first.value))
    throw ConvergenceError("adaptive quadrature: non-finite integrand value", first.value,
                           std::numeric_limits<double>::infinity());
  heap.push(first);
  double total = first.value;
  double total_err = first.err;
  int segments = 1;

  while (total_err > std::max(tol.abs_tol, tol.rel_tol * std::fabs(total))) {
    if (segments >= tol.max_subdivisions)
      throw ConvergenceError("adaptive quadrature: subdivision budget exhausted", total,
                             total_err);
    Segment worst = heap.top();
    // refinement cannot help once the worst segment sits at rounding level
    if (worst.err <= 1e-17 * std::fabs(total) + 1e-305) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = evaluate_segment(f, worst.a, mid, evaluations);
    Segment right = evaluate_segment(f, mid, worst.b, evaluations);
    if (!std::isfinite(left.value) || !std::isfinite(right.value))
      throw ConvergenceError("adaptive quadrature: non-finite integrand value", total,
                             std::numeric_limits<double>::infinity());
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  return {total, std::max(total_err, 0.0), evaluations};
}

// Wynn epsilon table applied to a sequence of partial sums; returns the
// accelerated limit and a stability-based error estimate.
std::pair<double, double> wynn_epsilon(const std::vector<double>& s) {
  if (s.size() < 3) return {s.empty() ? 0.0 : s.back(), 1e300};
  std::vector<double> cur = s, prev(s.size(), 0.0);
  double best = s.back();
  double best_err = std::fabs(s.back() - s[s.size() - 2]);
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      double diff = cur[j + 1] - cur[j];
      if (std::fabs(diff) < 1e-300) diff = std::copysign(1e-300, diff == 0 ? 1.0 : diff);
      next[j] = prev[j + 1] + 1.0 / diff;
    }
    prev.swap(cur);
    cur.swap(next);
    if (k % 2 == 0 && cur.size() >= 2) {
      double cand = cur.back();
      double err = std::fabs(cand - best);
      if (std::isfinite(cand) && err < best_err) {
        best_err = err;
        best = cand;
      }
    }
  }
  return {best, best_err};
}

}  // namespace

GaussRule gauss_laguerre_rule(int order, double alpha) {
  if (order < 1 || order > 512)
    throw std::invalid_argument("gauss_laguerre_rule: order in [1, 512]");
  if (!(alpha > -1.0)) throw std::domain_error("gauss_laguerre_rule: alpha > -1");
  const double mu0 = std::exp(specfun::log_gamma(1.0 + alpha));
  if (order == 1) return {{alpha + 1.0}, {mu0}};
  Eigen::VectorXd diag(order), sub(order - 1);
  for (int k = 0; k < order; ++k) diag(k) = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));
  return golub_welsch(diag, sub, mu0);
}

QuadratureResult adaptive_semi_infinite(const std::function<double(double)>& f,
                                        const Tolerance& tol) {
  // t = u / (1 - u) maps (0, 1) onto (0, inf); nodes stay interior so the
  // integrand is never evaluated at the endpoints
  auto mapped = [&f](double u) {
    const double om = 1.0 - u;
    const double t = u / om;
    return f(t) / (om * om);
  };
  return adaptive_core(mapped, 0.0, 1.0, tol);
}

QuadratureResult oscillatory_hankel_integrate(const std::function<double(double)>& g, int m,
                                              double p, const Tolerance& tol) {
  if (m < 0) throw std::invalid_argument("oscillatory_hankel_integrate: m >= 0");
  if (!(p >= 0.0)) throw std::domain_error("oscillatory_hankel_integrate: p >= 0");

  if (p == 0.0) {
    if (m > 0) return {0.0, 0.0, 0};  // J_m(0) = 0 for m > 0
    return adaptive_semi_infinite([&g](double r) { return g(r) * r; }, tol);
  }

  long evaluations = 0;

  // locate the support of |g(r) r| on a geometric ladder
  std::vector<std::pair<double, double>> samples;
  double peak = 0.0;
  for (double r = 1e-8; r < 1e8; r *= 1.3) {
    const double v = std::fabs(g(r) * r);
    ++evaluations;
    samples.emplace_back(r, v);
    peak = std::max(peak, v);
  }
  if (peak == 0.0) return {0.0, 0.0, evaluations};
  double r_cut = samples.back().first;
  for (std::size_t i = samples.size(); i-- > 0;) {
    if (samples[i].second > 1e-18 * peak) {
      r_cut = samples[i].first * 1.3;
      break;
    }
  }

  // panel edges: Bessel zeros of J_m(p r) inside the support, with wide gaps
  // chopped so no panel exceeds r_cut / 12
  const double w_max = r_cut / 12.0;
  std::vector<double> zero_edges;
  {
    int need = (int)std::ceil(p * r_cut / 3.1) + 2;
    std::vector<double> zs = specfun::bessel_j_zeros(m, std::min(need, 100000));
    for (double z : zs) {
      const double r = z / p;
      if (r >= r_cut) break;
      zero_edges.push_back(r);
    }
  }
  std::vector<double> edges{0.0};
  std::vector<std::size_t> zero_edge_index;  // positions of zero-aligned edges
  auto extend_to = [&edges, w_max](double target) {
    const double gap = target - edges.back();
    const int pieces = std::max(1, (int)std::ceil(gap / w_max));
    const double start = edges.back();
    for (int i = 1; i <= pieces; ++i) edges.push_back(start + gap * i / pieces);
  };
  for (double rz : zero_edges) {
    extend_to(rz);
    zero_edge_index.push_back(edges.size() - 1);
  }
  extend_to(r_cut);

  const GaussRule& g24 = support::gauss_legendre_rule(24);
  const GaussRule& g12 = support::gauss_legendre_rule(12);
  auto integrand = [&g, m, p](double r) { return g(r) * specfun::bessel_j(m, p * r) * r; };
  auto panel = [&](double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double v24 = 0.0, v12 = 0.0;
    for (int i = 0; i < 24; ++i) v24 += g24.weights[i] * integrand(mid + half * g24.nodes[i]);
    for (int i = 0; i < 12; ++i) v12 += g12.weights[i] * integrand(mid + half * g12.nodes[i]);
    evaluations += 36;
    return Segment{a, b, v24 * half, std::fabs((v24 - v12) * half)};
  };

  std::vector<Segment> panels;
  panels.reserve(edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    panels.push_back(panel(edges[i], edges[i + 1]));

  // partial sums at zero-aligned boundaries, kept for the acceleration fallback
  std::vector<double> zero_partial;
  {
    double acc = 0.0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      acc += panels[i].value;
      if (next < zero_edge_index.size() && i + 2 == zero_edge_index[next] + 1) {
        // edge k closes panel k-1
        zero_partial.push_back(acc);
        ++next;
      }
    }
  }

  double total = 0.0, total_err = 0.0;
  std::priority_queue<Segment, std::vector<Segment>, WorstFirst> heap;
  for (const Segment& s : panels) {
    if (!std::isfinite(s.value))
      throw ConvergenceError("hankel integration: non-finite integrand value", total,
                             std::numeric_limits<double>::infinity());
    total += s.value;
    total_err += s.err;
    heap.push(s);
  }
  total_err += 1e-18 * peak * r_cut;  // truncated tail bound

  int segments = (int)panels.size();
  while (total_err > std::max(tol.abs_tol, tol.rel_tol * std::fabs(total)) &&
         segments < std::max(tol.max_subdivisions, (int)panels.size() + 64)) {
    Segment worst = heap.top();
    if (worst.err <= 1e-17 * std::fabs(total) + 1e-305) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = panel(worst.a, mid);
    Segment right = panel(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++segments;
  }

  if (total_err <= std::max(tol.abs_tol, tol.rel_tol * std::fabs(total)) ||
      total_err <= 1e-14 * std::fabs(total) + 1e-300)
    return {total, std::max(total_err, 0.0), evaluations};

  // direct summation failed its budget: fall back on epsilon acceleration of
  // the zero-aligned partial sums
  auto [accel, accel_err] = wynn_epsilon(zero_partial);
  if (std::isfinite(accel) && accel_err < total_err) return {accel, accel_err, evaluations};
  if (total_err <= std::max(tol.abs_tol * 100, tol.rel_tol * 100 * std::fabs(total)))
    return {total, total_err, evaluations};
  throw ConvergenceError("hankel integration: tolerance not reached", total, total_err);
}

namespace support {

const GaussRule& gauss_legendre_rule(int order) {
  if (order < 1 || order > 512)
    throw std::invalid_argument("gauss_legendre_rule: order in [1, 512]");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  GaussRule rule;
  if (order == 1) {
    rule = {{0.0}, {2.0}};
  } else {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order), sub(order - 1);
    for (int k = 1; k < order; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    rule = golub_welsch(diag, sub, 2.0);
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

QuadratureResult adaptive_finite(const std::function<double(double)>& f, double a, double b,
                                 const Tolerance& tol) {
  if (!(b > a)) {
    if (b == a) return {0.0, 0.0, 0};
    throw std::invalid_argument("adaptive_finite: requires b >= a");
  }
  return adaptive_core(f, a, b, tol);
}

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw std::invalid_argument("PchipInterpolant: need matching arrays, length >= 2");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i]))
      throw std::invalid_argument("PchipInterpolant: abscissae must be strictly increasing");

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  d_.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  auto edge = [](double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (d * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::fabs(d) > 3.0 * std::fabs(d0)) return 3.0 * d0;
    return d;
  };
  if (n == 2) {
    d_[0] = d_[1] = delta[0];
  } else {
    d_[0] = edge(h[0], h[1], delta[0], delta[1]);
    d_[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  }
}

std::size_t PchipInterpolant::locate(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = (it == x_.begin()) ? 0 : (std::size_t)(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double PchipInterpolant::eval_interval(std::size_t i, double x) const {
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y_[i] + (t3 - 2.0 * t2 + t) * h * d_[i] +
         (-2.0 * t3 + 3.0 * t2) * y_[i + 1] + (t3 - t2) * h * d_[i + 1];
}

double PchipInterpolant::operator()(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  return eval_interval(locate(x), x);
}

double PchipInterpolant::integrate_transformed(
    const std::function<double(double, double)>& fn) const {
  const GaussRule& g8 = gauss_legendre_rule(8);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double mid = 0.5 * (x_[i] + x_[i + 1]);
    const double half = 0.5 * (x_[i + 1] - x_[i]);
    double acc = 0.0;
    for (int k = 0; k < 8; ++k) {
      const double x = mid + half * g8.nodes[k];
      acc += g8.weights[k] * fn(x, eval_interval(i, x));
    }
    total += acc * half;
  }
  return total;
}

double PchipInterpolant::integrate() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double h = x_[i + 1] - x_[i];
    total += 0.5 * h * (y_[i] + y_[i + 1]) + h * h * (d_[i] - d_[i + 1]) / 12.0;
  }
  return total;
}

}  // namespace support

}  // namespace fdd::numerics
