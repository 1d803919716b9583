#include "fdd/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace fdd::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Running product with a base-2 exponent carried separately so very long
// Pochhammer chains neither overflow nor underflow.
struct Scaled {
  long double mant = 1.0L;
  long exp2 = 0;

  void mul(long double f) {
    mant *= f;
    if (mant == 0.0L) {
      exp2 = 0;
      return;
    }
    if (std::fabs((double)mant) > 1e300 || std::fabs((double)mant) < 1e-300) {
      int e = 0;
      mant = frexpl(mant, &e);
      exp2 += e;
    }
  }
};

// accumulator in the same mantissa/exponent representation
struct ScaledSum {
  long double mant = 0.0L;
  long exp2 = 0;

  void add(long double m, long e) {
    if (m == 0.0L) return;
    if (mant == 0.0L) {
      mant = m;
      exp2 = e;
    } else if (e >= exp2) {
      mant = ldexpl(mant, (int)std::max<long>(exp2 - e, -16400L)) + m;
      exp2 = e;
    } else {
      mant += ldexpl(m, (int)std::max<long>(e - exp2, -16400L));
    }
    if (mant != 0.0L && (std::fabs((double)mant) > 1e300 || std::fabs((double)mant) < 1e-300)) {
      int ee = 0;
      mant = frexpl(mant, &ee);
      exp2 += ee;
    }
  }

  double value() const {
    if (mant == 0.0L) return 0.0;
    long double v = ldexpl(mant, (int)std::clamp<long>(exp2, -16400L, 16400L));
    return (double)v;
  }
};

double bessel_j_series(int m, double x) {
  // ascending series, adequate while the alternating terms stay comparable to
  // the result (x below the crossover chosen in bessel_j)
  const double h = 0.5 * x;
  double term = std::exp(m * std::log(h > 0 ? h : 1.0) - std::lgamma(m + 1.0));
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  double sum = term;
  const double q = h * h;
  for (int k = 0; k < 400; ++k) {
    term *= -q / ((k + 1.0) * (m + k + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1e-30)) break;
  }
  return sum;
}

double bessel_j_miller(int m, double x) {
  // backward recurrence normalized by J_0 + 2 sum_k J_{2k} = 1
  const int start = std::max(m, (int)std::ceil(x)) + 60;
  double fp = 0.0, fc = 1e-30;
  double target = 0.0;
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    double fm = (2.0 * k / x) * fc - fp;
    fp = fc;
    fc = fm;
    if (k - 1 == m) target = fc;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0 ? 1.0 : 2.0) * fc;
    if (std::fabs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      target *= 1e-250;
      norm *= 1e-250;
    }
  }
  return target / norm;
}

double bessel_j_asymptotic(int m, double x) {
  // Stokes amplitude/phase expansion, valid well above the turning point
  const double mu = 4.0 * (double)m * m;
  const double w = 8.0 * x;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  for (int k = 0; k < 18; ++k) {
    // after the update, term carries coefficient index k + 1; odd indices
    // feed Q, even feed P, and the sign flips every second index
    double num = mu - (double)(2 * k + 1) * (2 * k + 1);
    term *= num / (w * (k + 1.0));
    double contrib = (((k + 1) / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 0)
      q += contrib;
    else
      p += contrib;
    if (std::fabs(term) < 1e-17) break;
  }
  const double chi = x - (0.5 * m + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j_derivative(int m, double x) {
  if (m == 0) return -bessel_j(1, x);
  return 0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x));
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  static const double c[9] = {0.99999999999980993,     676.5203681218851,
                              -1259.1392167224028,     771.32342877765313,
                              -176.61502916214059,     12.507343278686905,
                              -0.13857109526572012,    9.9843695780195716e-6,
                              1.5056327351493116e-7};
  // Lanczos, g = 7. Reflection is unnecessary on the positive axis.
  double a = c[0];
  const double z = x - 1.0;
  for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
  const double tt = z + 7.5;
  return 0.91893853320467274178 + (z + 0.5) * std::log(tt) - tt + std::log(a);
}

double generalized_laguerre(int n, double alpha, double x) {
  if (n < 0 || n > 200) throw std::invalid_argument("generalized_laguerre: n in [0, 200]");
  if (!(alpha > -1.0)) throw std::domain_error("generalized_laguerre: alpha > -1");
  if (n == 0) return 1.0;
  double lm = 1.0;
  double lc = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double ln = ((2.0 * k + 1.0 + alpha - x) * lc - (k + alpha) * lm) / (k + 1.0);
    lm = lc;
    lc = ln;
  }
  return lc;
}

std::vector<double> laguerre_coefficients(int n, double alpha) {
  if (n < 0 || n > 60) throw std::invalid_argument("laguerre_coefficients: n in [0, 60]");
  std::vector<double> c(n + 1);
  // c_j = (-1)^j C(n + alpha, n - j) / j!
  double invfact = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) invfact /= j;
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    c[j] = sign * generalized_binomial(n + alpha, n - j) * invfact;
  }
  return c;
}

double generalized_binomial(double a, int k) {
  if (k < 0) throw std::invalid_argument("generalized_binomial: k >= 0");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1.0);
  return r;
}

double bessel_j(int m, double x) {
  if (m < 0 || m > 200) throw std::invalid_argument("bessel_j: m in [0, 200]");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j: x >= 0");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  if (x <= 8.0) return bessel_j_series(m, x);
  if (x >= std::max(35.0, 2.0 * m * m)) return bessel_j_asymptotic(m, x);
  return bessel_j_miller(m, x);
}

std::vector<double> bessel_j_zeros(int m, int count) {
  if (m < 0 || m > 50) throw std::invalid_argument("bessel_j_zeros: m in [0, 50]");
  if (count < 0) throw std::invalid_argument("bessel_j_zeros: count >= 0");

  static std::mutex mu;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& zs = cache[m];

  while ((int)zs.size() < count) {
    double lo, hi;
    if (zs.empty()) {
      if (m == 0) {
        lo = 2.0;
        hi = 3.0;
      } else {
        // first-zero asymptotic seed, then widen to a sign bracket
        double mm = (double)m;
        double seed = mm + 1.8557571 * std::cbrt(mm) + 1.033150 / std::cbrt(mm);
        lo = seed - 1.0;
        hi = seed + 1.0;
      }
    } else {
      lo = zs.back() + 0.25;
      hi = lo + 0.8;
    }
    // expand the bracket until J_m changes sign
    double flo = bessel_j(m, lo);
    int guard = 0;
    while (bessel_j(m, hi) * flo > 0.0 && guard++ < 400) {
      lo = hi;
      flo = bessel_j(m, lo);
      hi += 0.8;
    }
    if (guard >= 400) throw ConvergenceError("bessel_j_zeros: bracket scan failed", lo, 1.0);
    // bisect to a tight interval, then polish with Newton
    for (int i = 0; i < 40; ++i) {
      double mid = 0.5 * (lo + hi);
      double fm = bessel_j(m, mid);
      if (fm * flo <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fm;
      }
      if (hi - lo < 1e-9) break;
    }
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
      double f = bessel_j(m, z);
      double d = bessel_j_derivative(m, z);
      if (d == 0.0) break;
      double step = f / d;
      z -= step;
      if (std::fabs(step) < 1e-15 * z) break;
    }
    zs.push_back(z);
  }
  return std::vector<double>(zs.begin(), zs.begin() + count);
}

double expint_scaled(int n, double z) {
  if (n < 1) throw std::invalid_argument("expint_scaled: n >= 1");
  if (!(z > 0.0)) throw std::domain_error("expint_scaled: z > 0");

  if (z <= 1.0) {
    // E_1 by its ascending series, then the scaled upward recurrence
    double s = -kEulerGamma - std::log(z);
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
      term *= -z / k;
      double add = -term / k;
      s += add;
      if (std::fabs(add) < 1e-18 * std::fabs(s)) break;
    }
    double e = std::exp(z) * s;  // e^z E_1(z)
    for (int j = 1; j < n; ++j) e = (1.0 - z * e) / j;
    return e;
  }

  // modified Lentz continued fraction for e^z E_n(z); asymptotic in 1/z
  const double tiny = 1e-300;
  double b = z + n;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    double a = -(double)i * (n - 1.0 + i);
    b += 2.0;
    d = a * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) return h;
  }
  throw ConvergenceError("expint_scaled: continued fraction stalled", h, 1e-12);
}

double lauricella_fa_symmetric(const SymmetricLauricellaSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("lauricella_fa_symmetric: n >= 0");
  if (!(spec.c > 0.0)) throw std::invalid_argument("lauricella_fa_symmetric: c > 0");
  if (spec.copies < 1) throw std::invalid_argument("lauricella_fa_symmetric: copies >= 1");
  if ((long)spec.n * spec.copies > 10000)
    throw std::invalid_argument("lauricella_fa_symmetric: n * copies <= 10000");
  if (!std::isfinite(spec.x)) throw std::invalid_argument("lauricella_fa_symmetric: x finite");
  if (spec.n == 0) return 1.0;

  // coefficients of the single-factor polynomial sum_j (-n)_j/((c)_j j!) x^j
  const int n = spec.n;
  std::vector<long double> base(n + 1);
  base[0] = 1.0L;
  for (int j = 1; j <= n; ++j) {
    long double ratio = (long double)(-(n - j + 1)) * spec.x / ((spec.c + j - 1.0L) * j);
    base[j] = base[j - 1] * ratio;
  }

  // raise to the N-th power by repeated convolution in extended precision;
  // plain double here loses up to 8 digits to cancellation
  std::vector<long double> w = base;
  for (int rep = 2; rep <= spec.copies; ++rep) {
    std::vector<long double> nw(w.size() + n, 0.0L);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0.0L) continue;
      for (int j = 0; j <= n; ++j) nw[i + j] += w[i] * base[j];
    }
    w.swap(nw);
  }

  // contract against (a)_s with renormalized magnitude tracking
  Scaled poch;
  ScaledSum acc;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (s > 0) poch.mul((long double)spec.a + (long double)(s - 1));
    acc.add(w[s] * poch.mant, poch.exp2);
  }
  double out = acc.value();
  if (!std::isfinite(out))
    throw std::overflow_error("lauricella_fa_symmetric: result overflow");
  return out;
}

double lauricella_fa_bruteforce(double a, const std::vector<double>& bs,
                                const std::vector<double>& cs,
                                const std::vector<double>& xs) {
  const std::size_t dim = bs.size();
  if (cs.size() != dim || xs.size() != dim || dim == 0)
    throw std::invalid_argument("lauricella_fa_bruteforce: parameter lists must match");

  std::vector<int> caps(dim);
  double cells = 1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double r = std::round(bs[i]);
    if (bs[i] > 1e-9 || std::fabs(bs[i] - r) > 1e-9)
      throw std::invalid_argument("lauricella_fa_bruteforce: every b must be a nonpositive integer");
    caps[i] = (int)(-r);
    cells *= caps[i] + 1.0;
  }
  if (cells > 1e6) throw std::invalid_argument("lauricella_fa_bruteforce: truncation too large");

  // per-dimension factor tables (b)_j / ((c)_j j!) x^j
  std::vector<std::vector<long double>> fac(dim);
  int total_cap = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    fac[i].resize(caps[i] + 1);
    fac[i][0] = 1.0L;
    for (int j = 1; j <= caps[i]; ++j)
      fac[i][j] = fac[i][j - 1] * ((long double)(bs[i] + j - 1) * xs[i] / ((cs[i] + j - 1.0L) * j));
    total_cap += caps[i];
  }
  std::vector<long double> pochA(total_cap + 1);
  pochA[0] = 1.0L;
  for (int s = 1; s <= total_cap; ++s) pochA[s] = pochA[s - 1] * ((long double)a + s - 1);

  std::vector<int> idx(dim, 0);
  long double sum = 0.0L;
  while (true) {
    long double prod = 1.0L;
    int s = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      prod *= fac[i][idx[i]];
      s += idx[i];
    }
    sum += pochA[s] * prod;
    std::size_t k = 0;
    while (k < dim && ++idx[k] > caps[k]) idx[k++] = 0;
    if (k == dim) break;
  }
  return (double)sum;
}

}  // namespace fdd::specfun
