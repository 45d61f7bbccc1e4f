#include "qgt/branching.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "qgt/errors.hpp"

namespace qgt {

LaurentPoly restrict_character(TypeLabel t, const Signature& lambda, const BaseParam& base) {
  const int n = lambda.rank();
  if (n < 1) throw usage_error("restriction needs rank >= 1");
  LaurentPoly p = (t == TypeLabel::D) ? basis_poly(t, lambda) : character(t, lambda)->poly;
  const Rational last = scaled_point(t, n, n, base);
  LaurentPoly q = p.substitute_last(last);
  if (t == TypeLabel::A) {
    // rank-dependent points: q^{N+1-2i} = q * q^{(N-1)+1-2i}
    for (int i = 0; i < n - 1; ++i) q = q.scale_var(i, base.q);
  }
  return q;
}

std::map<Signature, Rational> expand_in_characters(LaurentPoly p, TypeLabel t, int rank) {
  std::map<Signature, Rational> out;
  if (rank == 0) {
    // rank-0 basis is the constant 1
    if (!p.is_zero()) {
      auto lead = p.leading_term().value();
      if (lead.first != ExponentVec{}) throw not_in_span("nonconstant rank-0 expansion");
      out.emplace(Signature{}, lead.second);
    }
    return out;
  }
  constexpr long kMaxIters = 1000000;
  long iters = 0;
  while (!p.is_zero()) {
    if (++iters > kMaxIters) throw not_in_span("expansion iteration cap exceeded");
    auto lead = p.leading_dominant_term();
    if (!lead) throw not_in_span("no dominant leading term while remainder is nonzero");
    Signature mu(std::vector<int>(lead->first.begin(), lead->first.end()));
    // basis elements have top coefficient 1 at mu
    const Rational a = lead->second;
    p = p - basis_poly(t, mu).scaled(a);
    auto [it, fresh] = out.emplace(mu, a);
    if (!fresh) throw not_in_span("leading term repeated during expansion");
  }
  return out;
}

LinkRow link_row(TypeLabel t, const Signature& lambda, const BaseParam& base) {
  const int n = lambda.rank();
  if (!lambda.valid_nonneg()) throw usage_error("link source must be a nonnegative signature");
  LinkRow row;
  row.source = lambda;
  if (n == 0) throw usage_error("link needs rank >= 1");
  auto coeffs = expand_in_characters(restrict_character(t, lambda, base), t, n - 1);
  const Rational dl = basis_qdimension(t, lambda, base);
  Rational total(0);
  for (const auto& [mu, a] : coeffs) {
    Rational w = a * ((n - 1 == 0) ? Rational(1) : basis_qdimension(t, mu, base)) / dl;
    if (w < 0) throw invariant_violation("negative link weight at " + lambda.to_string());
    if (w == 0) continue;
    total += w;
    row.weights.emplace(mu, std::move(w));
  }
  if (total != 1)
    throw invariant_violation("link row of " + lambda.to_string() + " sums to " +
                              rational_to_string(total) + ", not 1");
  return row;
}

std::vector<LinkRow> link_rows_upto(TypeLabel t, int rank, int max_size, const BaseParam& base) {
  std::vector<LinkRow> rows;
  for (const auto& lam : enumerate_signatures(rank, max_size)) rows.push_back(link_row(t, lam, base));
  return rows;
}

template <class W>
BasicSignatureMeasure<W> pushforward(const BasicSignatureMeasure<W>& m, TypeLabel t,
                                     const BaseParam& base) {
  BasicSignatureMeasure<W> out;
  out.rank = m.rank - 1;
  out.tail = m.tail;
  for (const auto& [lam, w] : m.weights) {
    auto row = link_row(t, lam, base);
    for (const auto& [mu, p] : row.weights) {
      W contrib;
      if constexpr (std::is_same_v<W, Rational>)
        contrib = w * p;
      else
        contrib = w * to_double(p);
      auto it = out.weights.find(mu);
      if (it == out.weights.end())
        out.weights.emplace(mu, contrib);
      else
        it->second += contrib;
    }
  }
  return out;
}

template SignatureMeasure pushforward<double>(const SignatureMeasure&, TypeLabel, const BaseParam&);
template SignatureMeasureExact pushforward<Rational>(const SignatureMeasureExact&, TypeLabel,
                                                     const BaseParam&);

namespace {

using cplx = std::complex<double>;

// candidate targets of a restriction: nonnegative rank-(N-1) signatures
// bounded by the highest weight
std::vector<Signature> restriction_candidates(const Signature& lambda) {
  const int n = lambda.rank();
  std::vector<Signature> cand;
  for (const auto& mu : enumerate_signatures(n - 1, static_cast<int>(lambda.size()))) {
    bool ok = mu.rank() == 0 || mu.parts[0] <= lambda.parts[0];
    if (ok) cand.push_back(mu);
  }
  return cand;
}

// dense complex linear solve with partial pivoting; returns false when the
// pivot collapses
bool solve_complex(std::vector<std::vector<cplx>> a, std::vector<cplx> b, std::vector<cplx>& x) {
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (std::abs(a[piv][k]) < 1e-9) return false;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  x.assign(n, cplx(0));
  for (int i = n - 1; i >= 0; --i) {
    cplx s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return true;
}

std::vector<cplx> random_torus_point(int dim, std::mt19937_64& rng) {
  std::vector<cplx> z(dim);
  for (int i = 0; i < dim; ++i) {
    const double theta =
        2.0 * M_PI * (static_cast<double>(rng()) / static_cast<double>(UINT64_MAX));
    z[i] = cplx(std::cos(theta), std::sin(theta));
  }
  return z;
}

// shared machinery: solve for expansion coefficients of the (float)
// restriction against float basis values at random torus points
std::map<Signature, double> solve_restriction_row(TypeLabel t, const Signature& lambda,
                                                  const BaseParam& base, unsigned long seed,
                                                  double residual_tol) {
  const int n = lambda.rank();
  const auto cand = restriction_candidates(lambda);
  const int m = static_cast<int>(cand.size());
  LaurentPolyF restricted = [&] {
    // the type D basis element with a vanishing last part is the character itself
    LaurentPolyF p = (t == TypeLabel::D && lambda.rank() > 0 && lambda.parts.back() != 0)
                         ? to_float_poly(basis_poly(t, lambda))
                         : character_float(t, lambda);
    LaurentPolyF q = p.substitute_last(to_double(scaled_point(t, n, n, base)));
    if (t == TypeLabel::A)
      for (int i = 0; i < n - 1; ++i) q = q.scale_var(i, to_double(base.q));
    return q;
  }();

  std::vector<LaurentPolyF> basis;
  basis.reserve(m);
  for (const auto& mu : cand) {
    if (mu.rank() == 0) {
      basis.push_back(LaurentPolyF::constant(0, 1.0));
    } else if (t == TypeLabel::D && mu.parts.back() != 0) {
      basis.push_back(to_float_poly(basis_poly(t, mu)));
    } else {
      basis.push_back(character_float(t, mu));
    }
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<std::vector<cplx>> a(m, std::vector<cplx>(m));
    std::vector<cplx> b(m);
    for (int p = 0; p < m; ++p) {
      auto z = random_torus_point(n - 1, rng);
      for (int j = 0; j < m; ++j) a[p][j] = basis[j].evaluate<cplx>(z);
      b[p] = restricted.evaluate<cplx>(z);
    }
    std::vector<cplx> x;
    if (!solve_complex(a, b, x)) continue;
    // residual check at fresh points
    double max_res = 0;
    for (int p = 0; p < 3; ++p) {
      auto z = random_torus_point(n - 1, rng);
      cplx lhs = restricted.evaluate<cplx>(z);
      cplx rhs(0);
      for (int j = 0; j < m; ++j) rhs += x[j] * basis[j].evaluate<cplx>(z);
      max_res = std::max(max_res, std::abs(lhs - rhs));
    }
    double scale = 1.0;
    for (const auto& v : x) scale = std::max(scale, std::abs(v));
    if (max_res > residual_tol * scale) continue;
    std::map<Signature, double> out;
    for (int j = 0; j < m; ++j) {
      if (std::abs(x[j].real()) > 1e-9 * scale)
        out.emplace(cand[j], x[j].real());
    }
    return out;
  }
  throw error("random-evaluation solve stayed ill-conditioned after 5 attempts");
}

}  // namespace

std::map<Signature, double> link_row_float(TypeLabel t, const Signature& lambda,
                                           const BaseParam& base, unsigned long seed) {
  const int n = lambda.rank();
  auto coeffs = solve_restriction_row(t, lambda, base, seed, 1e-7);
  LaurentPolyF fl = (t == TypeLabel::D && n > 0 && lambda.parts.back() != 0)
                        ? to_float_poly(basis_poly(t, lambda))
                        : character_float(t, lambda);
  std::vector<double> pts;
  for (int i = 1; i <= n; ++i) pts.push_back(to_double(scaled_point(t, n, i, base)));
  const double dl = fl.evaluate<double>(pts);
  std::map<Signature, double> row;
  for (const auto& [mu, a] : coeffs) {
    double dmu = 1.0;
    if (mu.rank() > 0) {
      LaurentPolyF fm = (t == TypeLabel::D && mu.parts.back() != 0)
                            ? to_float_poly(basis_poly(t, mu))
                            : character_float(t, mu);
      std::vector<double> mpts;
      for (int i = 1; i <= mu.rank(); ++i)
        mpts.push_back(to_double(scaled_point(t, mu.rank(), i, base)));
      dmu = fm.evaluate<double>(mpts);
    }
    row.emplace(mu, a * dmu / dl);
  }
  return row;
}

std::map<Signature, long> classical_branching_oracle(TypeLabel t, const Signature& lambda,
                                                     unsigned long seed) {
  if (lambda.rank() > 3 || lambda.size() > 4)
    throw usage_error("classical branching oracle is desk-scale (rank <= 3, |lambda| <= 4)");
  const BaseParam classical{Rational(1)};
  auto coeffs = solve_restriction_row(t, lambda, classical, seed, 1e-8);
  std::map<Signature, long> out;
  for (const auto& [mu, a] : coeffs) {
    const long rounded = std::lround(a);
    if (std::abs(a - static_cast<double>(rounded)) > 1e-6)
      throw error("classical multiplicity failed to round: " + std::to_string(a));
    if (rounded != 0) out.emplace(mu, rounded);
  }
  return out;
}

}  // namespace qgt
