#pragma once

#include <map>
#include <vector>

#include "qgt/characters.hpp"

namespace qgt {

// One row of the rank-lowering stochastic link: exact nonnegative weights
// over rank-(N-1) signatures summing to exactly 1.
struct LinkRow {
  Signature source;
  std::map<Signature, Rational> weights;
};

template <class W>
struct BasicSignatureMeasure {
  int rank = 0;
  std::map<Signature, W> weights;
  double tail = 0.0;
};
using SignatureMeasure = BasicSignatureMeasure<double>;
using SignatureMeasureExact = BasicSignatureMeasure<Rational>;

// f_lambda with the last variable fixed at its scaled evaluation point
// (type D restricts the symmetrized basis element; type A also rescales the
// remaining variables by q since its evaluation points are rank-dependent).
LaurentPoly restrict_character(TypeLabel t, const Signature& lambda, const BaseParam& base);

// Expansion of a Weyl-invariant polynomial in the character basis of the
// given type and rank by leading-dominant-term subtraction. Exact; throws
// not_in_span when a leading term falls outside the dominant cone.
std::map<Signature, Rational> expand_in_characters(LaurentPoly p, TypeLabel t, int rank);

LinkRow link_row(TypeLabel t, const Signature& lambda, const BaseParam& base);

// All rows with |lambda| <= max_size at the given rank.
std::vector<LinkRow> link_rows_upto(TypeLabel t, int rank, int max_size, const BaseParam& base);

// Float mirror: link row recovered by evaluating the float restriction at
// random torus points and solving the linear system; independent of the
// exact leading-term expansion.
std::map<Signature, double> link_row_float(TypeLabel t, const Signature& lambda,
                                           const BaseParam& base, unsigned long seed = 9001);

template <class W>
BasicSignatureMeasure<W> pushforward(const BasicSignatureMeasure<W>& m, TypeLabel t,
                                     const BaseParam& base);

// Classical branching multiplicities (q = 1) by random-evaluation linear
// solve, rounded to integers with residual check; independent oracle for the
// exact expansion path. Returns the full restriction row of lambda.
std::map<Signature, long> classical_branching_oracle(TypeLabel t, const Signature& lambda,
                                                     unsigned long seed = 4242);

}  // namespace qgt
