#pragma once

#include <vector>

#include "fdd/common.hpp"

namespace fdd::specfun {

// log Gamma(x) for x > 0, Lanczos approximation, reentrant. Relative error
// below 1e-13 for x <= 170. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// Generalized Laguerre polynomial L_n^alpha(x) by the three-term upward
// recurrence. n in [0, 200], alpha > -1.
double generalized_laguerre(int n, double alpha, double x);

// Monomial coefficients of L_n^alpha: returns c such that
// L_n^alpha(x) = sum_j c[j] x^j. Exact signed values via descending products.
std::vector<double> laguerre_coefficients(int n, double alpha);

// Binomial coefficient C(a, k) for real a and integer k >= 0, evaluated as the
// descending product a (a-1) ... (a-k+1) / k!.
double generalized_binomial(double a, int k);

// Bessel function of the first kind J_m(x) for integer m in [0, 50] and
// m in [0, 200], x >= 0; absolute error below 1e-12. Ascending series for
// small x, Miller backward recurrence with the even-order normalization in
// the midrange, amplitude/phase expansion well above the turning point.
double bessel_j(int m, double x);

// First `count` positive zeros of J_m, increasing. Asymptotic seeds polished
// by Newton steps with a bracketing fallback.
std::vector<double> bessel_j_zeros(int m, int count);

// Scaled exponential integral e^z E_n(z) for integer n >= 1 and z > 0.
// Series plus stable upward recurrence for z <= 1, modified Lentz continued
// fraction (asymptotic in 1/z) otherwise. Overflow free for large z.
double expint_scaled(int n, double z);

// Confluent Lauricella function F_A with N identical factors:
//   F_A(a; -n, ..., -n; c, ..., c; x, ..., x)
// where every numerator parameter is the same nonpositive integer -n, every
// denominator parameter is c > 0 and every argument is x. The generating
// polynomial sum_j [(-n)_j / ((c)_j j!)] x^j t^j is raised to the N-th power
// by repeated coefficient convolution in extended precision, then contracted
// against Pochhammer weights (a)_s with overflow-safe renormalization.
struct SymmetricLauricellaSpec {
  double a = 1.0;
  int n = 0;       // polynomial degree of each factor, >= 0
  double c = 1.0;  // shared denominator parameter, > 0
  double x = 0.0;  // shared argument
  int copies = 1;  // N >= 1; n * copies <= 10000
};
double lauricella_fa_symmetric(const SymmetricLauricellaSpec& spec);

// Reference evaluation of F_A(a; b_1..b_N; c_1..c_N; x_1..x_N) by truncating
// nested sums. Every b_i must be a nonpositive integer; the product of
// (|b_i| + 1) must not exceed 1e6.
double lauricella_fa_bruteforce(double a, const std::vector<double>& bs,
                                const std::vector<double>& cs,
                                const std::vector<double>& xs);

}  // namespace fdd::specfun
