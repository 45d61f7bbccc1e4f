#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgt/branching.hpp"
#include "qgt/characters.hpp"

namespace qgt {

// Boundary parameter triple (alpha, beta, gamma): both lists weakly
// decreasing and nonnegative, beta_1 <= 1.
struct OmegaParams {
  std::vector<double> alpha;
  std::vector<double> beta;
  double gamma = 0.0;

  void validate() const;
  bool trivial() const { return alpha.empty() && beta.empty() && gamma == 0.0; }
  // alpha_i (1 + alpha_i/2)
  std::vector<double> alpha_tilde() const;
  // beta_i (1 - beta_i/2)
  std::vector<double> beta_tilde() const;
  // smallest pole 1 + 1/alpha~_1 of the generating function, +inf without alpha
  double pole_radius() const;
};

// Rational mirror of the parameters: with these, every Taylor coefficient is
// e^{-gamma} times an exact rational, which makes sign checks exact.
struct OmegaParamsQ {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  Rational gamma = Rational(0);
  OmegaParams to_double() const;
};

// Taylor coefficients phi(0..order) of the generating function about x = 0,
// with a certified remainder bound at the evaluation radius: all phi(n) are
// nonnegative, so tail(M, R) = Phi(R) - sum_{n<=M} phi(n) R^n exactly.
struct SeriesCoeffs {
  std::vector<double> phi;
  double radius = 1.0;
  double tail_bound = 0.0;
  int order() const { return static_cast<int>(phi.size()) - 1; }
};

// closed-form evaluation of the generating function at real x (pole-guarded)
double phi_closed_form(const OmegaParams& omega, double x);
// Psi(y) = Phi((y + 1/y)/2) for real y > 0
double psi_eval(const OmegaParams& omega, double y);

SeriesCoeffs phi_coefficients(const OmegaParams& omega, double tolerance, double radius,
                              int min_order = 0);

// e^{+gamma}-scaled exact coefficients: phi(n) = e^{-gamma} * c_n
std::vector<Rational> phi_scaled_coefficients_exact(const OmegaParamsQ& omega, int order);

// Symmetric Fourier coefficients of Psi on the unit circle with a certified
// absolute tail bound.
struct FourierCoeffs {
  std::vector<double> values;  // index 0..K
  double tail_bound = 0.0;
  int half_width() const { return static_cast<int>(values.size()) - 1; }
  double at(long m) const;
};

FourierCoeffs psi_fourier_coeffs(const OmegaParams& omega, int half_width, double tolerance);

// Psi at the scaled evaluation points q^{c_i}, i = 1..N
std::vector<double> psi_at_scaled(const OmegaParams& omega, TypeLabel t, int rank,
                                  const BaseParam& base);

struct AdmissibilityReport {
  bool pass = false;
  double pole_radius = 0.0;
  double max_scaled_point = 0.0;
  double margin = 0.0;      // pole_radius - max point (convergence margin)
  double min_psi = 0.0;     // min_i Psi(q^{c_i})
  int violating_index = 0;  // 1-based index of first failure, 0 if none
  std::vector<double> psi_values;
};

AdmissibilityReport admissibility_check(const OmegaParams& omega, TypeLabel t, int rank,
                                        const BaseParam& base);

// det[phi(lambda_j - j + i)]_{i,j=1..N} with phi(k) = 0 for k < 0
double toeplitz_minor(const SeriesCoeffs& series, const Signature& lambda);
double toeplitz_minor(const OmegaParams& omega, const Signature& lambda);
// exact sign route: returns det of the e^{+N gamma}-scaled rational matrix
Rational toeplitz_minor_exact(const OmegaParamsQ& omega, const Signature& lambda);

// det[x_i^{lambda_j - j + N}]/det[x_i^{N - j}]; equals 1 at lambda = 0
double schur_at_scaled(const Signature& lambda, const std::vector<double>& x);
Rational schur_at_scaled_exact(const Signature& lambda, const std::vector<Rational>& x);

std::vector<double> scaled_points_double(TypeLabel t, int rank, const BaseParam& base);

// The series-route weight toeplitz_minor * schur_at_scaled / prod Psi. Sums
// to 1 over all signatures (Cauchy-Binet), but these are not the coherent
// expansion weights; kept as a cross-check measure. See coherent_weight.
double toeplitz_schur_weight(const OmegaParams& omega, TypeLabel t, const Signature& lambda,
                             const BaseParam& base);

// True expansion weight of the distinguished character over the normalized
// irreducible characters, via the torus-orthogonality determinant
// qdim(lambda) det[E(l0_i, m_j)] / (2^N prod_j Psi(q^{c_j})) where E is the
// symmetric Fourier pairing entry. These weights are the coherent system.
double coherent_weight(const OmegaParams& omega, TypeLabel t, const Signature& lambda,
                       const BaseParam& base);

SignatureMeasure coherent_measure(const OmegaParams& omega, TypeLabel t, int rank,
                                  const BaseParam& base, double mass_tolerance,
                                  int level_cap = 120);

// exact Gamma-ratio normalizer for the two parameter sums that occur
// (two_a, two_b in {-1, +1} with two_a + two_b in {0, 2})
Rational kappa_normalizer(int l, int two_a, int two_b);

double jacobi_poly_1var(int n, double a, double b, double x);

// |det[x_i^{lambda_j-j+N}]/V - P_lambda(x; a, b)/prod kappa| for N <= 2
double jacobi_identity_check(const Signature& lambda, const std::vector<double>& x, double a,
                             double b);

}  // namespace qgt
