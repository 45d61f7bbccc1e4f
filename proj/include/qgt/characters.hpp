#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "qgt/laurent.hpp"
#include "qgt/rational.hpp"
#include "qgt/signature.hpp"

namespace qgt {

enum class TypeLabel { A, B, C, D };

TypeLabel parse_type(const std::string& s);
std::string type_name(TypeLabel t);

// 2*epsilon(X) for X = B, C, D
int eps2(TypeLabel t);

// 2*c(X)_i = 2(i-1) + 2*epsilon(X), i >= 1 (types B, C, D; c is rank-free)
int c_shift2(TypeLabel t, int i);

// r-exponent k of the i-th evaluation point q^{c_i} = r^k (type A uses the
// rank-dependent exponents q^{N+1-2i})
long scaled_point_r_exponent(TypeLabel t, int rank, int i);

Rational scaled_point(TypeLabel t, int rank, int i, const BaseParam& base);
std::vector<Rational> scaled_points_exact(TypeLabel t, int rank, const BaseParam& base);

// Product-form Weyl denominator: prod_{i<j} (z_i + z_i^{-1} - z_j - z_j^{-1})
// for B/C/D; the Vandermonde det[z_j^{N-i}] for type A.
LaurentPoly weyl_denominator(TypeLabel t, int rank);

// The two determinant forms equal to the product form (B/C quotient entries,
// D half-sum form); exposed for the exact identity checks.
LaurentPoly weyl_denominator_det_bc(TypeLabel t, int rank);
LaurentPoly weyl_denominator_det_d(int rank);

// Determinant of a matrix of Laurent polynomials: cofactor expansion for
// small sizes, fraction-free Bareiss elimination above that.
template <class C>
BasicLaurentPoly<C> det_poly(std::vector<std::vector<BasicLaurentPoly<C>>> m);

struct Character {
  TypeLabel type;
  Signature lambda;
  LaurentPoly poly;  // weight-multiplicity Laurent polynomial in rank variables
};

// Construct (and cache) the irreducible character polynomial. For type D the
// last part may be negative; all other types require nonnegative parts
// except type A, which admits any weakly decreasing integer tuple.
std::shared_ptr<const Character> character(TypeLabel t, const Signature& lambda);

// Expansion basis element for the branching algorithm: the character itself
// for A/B/C; for D the symmetrized element (f_lambda + f_lambda~ when the
// last part is positive, f_lambda itself when it is zero).
LaurentPoly basis_poly(TypeLabel t, const Signature& lambda);

// Tr(K_{2rho}) = f_lambda at the scaled point; strictly positive.
Rational qdimension(TypeLabel t, const Signature& lambda, const BaseParam& base);

// Value of the basis_poly at the scaled point (the normalizer used by links).
Rational basis_qdimension(TypeLabel t, const Signature& lambda, const BaseParam& base);

// Normalized character value at a torus point (all |z_i| = 1); equals 1 at
// z = (1,...,1). Type D uses the symmetrized numerator and denominator.
std::complex<double> normalized_character_eval(TypeLabel t, const Signature& lambda,
                                               const std::vector<std::complex<double>>& z,
                                               const BaseParam& base);

// Exact polynomial identity f_lambda + f_lambda~ = det[z^m + z^-m]/V^s.
bool type_d_remark_check(const Signature& lambda);

// Exact Fourier bookkeeping for the torus inner product of two characters of
// type B or C against the Weyl measure; returns |<f_lambda, f_mu> - delta|.
Rational torus_orthogonality_check(TypeLabel t, const Signature& lambda, const Signature& mu);

// Independent classical dimension oracle (Weyl dimension formula over the
// explicit positive root systems).
Rational classical_weyl_dimension(TypeLabel t, const Signature& lambda);

// Float mirror of the character construction (same determinant/division
// pipeline in doubles).
LaurentPolyF character_float(TypeLabel t, const Signature& lambda);

// Optional on-disk cache of constructed characters.
void load_character_cache(const std::string& path);
void save_character_cache(const std::string& path);
size_t character_cache_size();

}  // namespace qgt
