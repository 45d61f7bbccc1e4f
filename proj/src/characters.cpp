#include "qgt/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qgt/errors.hpp"
#include "json.hpp"

namespace qgt {

TypeLabel parse_type(const std::string& s) {
  if (s == "A" || s == "a") return TypeLabel::A;
  if (s == "B" || s == "b") return TypeLabel::B;
  if (s == "C" || s == "c") return TypeLabel::C;
  if (s == "D" || s == "d") return TypeLabel::D;
  throw usage_error("unknown type label: " + s);
}

std::string type_name(TypeLabel t) {
  switch (t) {
    case TypeLabel::A: return "A";
    case TypeLabel::B: return "B";
    case TypeLabel::C: return "C";
    case TypeLabel::D: return "D";
  }
  throw error("bad type label");
}

int eps2(TypeLabel t) {
  switch (t) {
    case TypeLabel::B: return 1;
    case TypeLabel::C: return 2;
    case TypeLabel::D: return 0;
    default: throw error("eps2 is defined for types B, C, D");
  }
}

int c_shift2(TypeLabel t, int i) { return 2 * (i - 1) + eps2(t); }

long scaled_point_r_exponent(TypeLabel t, int rank, int i) {
  if (t == TypeLabel::A) return 4L * (rank + 1 - 2 * i);  // q^{N+1-2i}
  return 2L * c_shift2(t, i);                             // q^{c(X)_i}
}

Rational scaled_point(TypeLabel t, int rank, int i, const BaseParam& base) {
  return base.r_pow(scaled_point_r_exponent(t, rank, i));
}

std::vector<Rational> scaled_points_exact(TypeLabel t, int rank, const BaseParam& base) {
  std::vector<Rational> out;
  out.reserve(rank);
  for (int i = 1; i <= rank; ++i) out.push_back(scaled_point(t, rank, i, base));
  return out;
}

namespace {

// (z^l - z^-l)/(z^eps - z^-eps) as a closed-form geometric sum in variable
// `var` of an n-variable polynomial; twol = 2l. Requires twol > 0 and
// eps2 | twol.
template <class C>
BasicLaurentPoly<C> quotient_entry(int n, int var, int twol, int e2) {
  BasicLaurentPoly<C> p(n);
  const int m = twol / e2;
  for (int k = 0; k < m; ++k) {
    ExponentVec e(n, 0);
    e[var] = (twol - e2 * (1 + 2 * k)) / 2;
    p.add_term(e, C(1));
  }
  return p;
}

// z^l + z^-l (twol even, may be zero or negative)
template <class C>
BasicLaurentPoly<C> cosine_entry(int n, int var, int twol) {
  BasicLaurentPoly<C> p(n);
  ExponentVec e(n, 0);
  e[var] = twol / 2;
  p.add_term(e, C(1));
  e[var] = -twol / 2;
  p.add_term(e, C(1));
  return p;
}

// z^l - z^-l
template <class C>
BasicLaurentPoly<C> sine_entry(int n, int var, int twol) {
  BasicLaurentPoly<C> p(n);
  if (twol == 0) return p;
  ExponentVec e(n, 0);
  e[var] = twol / 2;
  p.add_term(e, C(1));
  e[var] = -twol / 2;
  p.add_term(e, C(-1));
  return p;
}

template <class C>
BasicLaurentPoly<C> det_cofactor(const std::vector<std::vector<BasicLaurentPoly<C>>>& m,
                                 std::vector<int> cols, int row) {
  const int n = static_cast<int>(m.size());
  if (row == n) return BasicLaurentPoly<C>::constant(m[0][0].vars(), C(1));
  BasicLaurentPoly<C> acc(m[0][0].vars());
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    auto sub = det_cofactor(m, rest, row + 1);
    auto term = m[row][cols[k]] * sub;
    if (k % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

template <class C>
BasicLaurentPoly<C> det_bareiss(std::vector<std::vector<BasicLaurentPoly<C>>> m) {
  const int n = static_cast<int>(m.size());
  const int vars = m[0][0].vars();
  BasicLaurentPoly<C> prev = BasicLaurentPoly<C>::constant(vars, C(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return BasicLaurentPoly<C>(vars);  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  auto d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

template <class C>
BasicLaurentPoly<C> det_poly(std::vector<std::vector<BasicLaurentPoly<C>>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw error("determinant of empty matrix");
  if (n <= 4) {
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(std::move(m));
}

template LaurentPoly det_poly<Rational>(std::vector<std::vector<LaurentPoly>>);
template LaurentPolyF det_poly<double>(std::vector<std::vector<LaurentPolyF>>);

LaurentPoly weyl_denominator(TypeLabel t, int rank) {
  if (rank < 1) throw error("weyl_denominator needs rank >= 1");
  if (t == TypeLabel::A) {
    // det[z_j^{N-i}] = prod_{i<j}(z_i - z_j); fixes s_0 = 1
    std::vector<std::vector<LaurentPoly>> m(rank, std::vector<LaurentPoly>(rank, LaurentPoly(rank)));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        m[i][j] = LaurentPoly::variable(rank, j, rank - 1 - i);
    return det_poly(std::move(m));
  }
  LaurentPoly acc = LaurentPoly::constant(rank, Rational(1));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      LaurentPoly f(rank);
      ExponentVec e(rank, 0);
      e[i] = 1;
      f.add_term(e, Rational(1));
      e[i] = -1;
      f.add_term(e, Rational(1));
      e[i] = 0;
      e[j] = 1;
      f.add_term(e, Rational(-1));
      e[j] = -1;
      f.add_term(e, Rational(-1));
      acc = acc * f;
    }
  return acc;
}

LaurentPoly weyl_denominator_det_bc(TypeLabel t, int rank) {
  if (t != TypeLabel::B && t != TypeLabel::C) throw error("quotient det form is for types B, C");
  const int e2 = eps2(t);
  std::vector<std::vector<LaurentPoly>> m(rank, std::vector<LaurentPoly>(rank));
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j)
      m[i - 1][j - 1] = quotient_entry<Rational>(rank, j - 1, c_shift2(t, rank - i + 1), e2);
  return det_poly(std::move(m));
}

LaurentPoly weyl_denominator_det_d(int rank) {
  std::vector<std::vector<LaurentPoly>> m(rank, std::vector<LaurentPoly>(rank));
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j)
      m[i - 1][j - 1] = cosine_entry<Rational>(rank, j - 1, c_shift2(TypeLabel::D, rank - i + 1));
  return det_poly(std::move(m)).scaled(Rational(1, 2));
}

namespace {

void validate_signature(TypeLabel t, const Signature& lam) {
  if (!lam.weakly_decreasing()) throw usage_error("signature is not weakly decreasing: " + lam.to_string());
  switch (t) {
    case TypeLabel::A:
      return;  // signed parts allowed
    case TypeLabel::D: {
      // last part may be negative but must not exceed the previous in magnitude
      if (lam.rank() >= 2 && std::abs(lam.parts.back()) > lam.parts[lam.rank() - 2])
        throw usage_error("invalid type D signature: " + lam.to_string());
      return;
    }
    default:
      if (!lam.nonnegative()) throw usage_error("signature has negative parts: " + lam.to_string());
  }
}

// generic determinant-formula construction, shared by the exact and float
// instantiations
template <class C>
BasicLaurentPoly<C> build_character(TypeLabel t, const Signature& lam) {
  const int n = lam.rank();
  if (n == 0) return BasicLaurentPoly<C>::constant(0, C(1));

  if (t == TypeLabel::A) {
    // shift signed signatures into nonnegative territory, divide back at the end
    int shift = std::min(0, lam.parts.back());
    std::vector<std::vector<BasicLaurentPoly<C>>> num(n, std::vector<BasicLaurentPoly<C>>(n));
    std::vector<std::vector<BasicLaurentPoly<C>>> den(n, std::vector<BasicLaurentPoly<C>>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        num[i - 1][j - 1] =
            BasicLaurentPoly<C>::variable(n, j - 1, lam.parts[i - 1] - shift + n - i);
        den[i - 1][j - 1] = BasicLaurentPoly<C>::variable(n, j - 1, n - i);
      }
    auto p = exact_div(det_poly(std::move(num)), det_poly(std::move(den)));
    if (shift != 0) {
      BasicLaurentPoly<C> mono =
          BasicLaurentPoly<C>::monomial(n, ExponentVec(n, shift), C(1));
      p = p * mono;
    }
    return p;
  }

  auto vsd = [&] {
    LaurentPoly vs = weyl_denominator(TypeLabel::C, n);
    if constexpr (std::is_same_v<C, Rational>)
      return vs;
    else
      return to_float_poly(vs);
  }();

  if (t == TypeLabel::B || t == TypeLabel::C) {
    const int e2 = eps2(t);
    std::vector<std::vector<BasicLaurentPoly<C>>> m(n, std::vector<BasicLaurentPoly<C>>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        m[i - 1][j - 1] =
            quotient_entry<C>(n, j - 1, 2 * lam.parts[i - 1] + c_shift2(t, n - i + 1), e2);
    return exact_div(det_poly(std::move(m)), vsd);
  }

  // type D: (det[z^m + z^-m] + det[z^m - z^-m]) / (2 V^s)
  std::vector<std::vector<BasicLaurentPoly<C>>> mp(n, std::vector<BasicLaurentPoly<C>>(n));
  std::vector<std::vector<BasicLaurentPoly<C>>> mm(n, std::vector<BasicLaurentPoly<C>>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int twol = 2 * lam.parts[i - 1] + c_shift2(TypeLabel::D, n - i + 1);
      mp[i - 1][j - 1] = cosine_entry<C>(n, j - 1, twol);
      mm[i - 1][j - 1] = sine_entry<C>(n, j - 1, twol);
    }
  auto plus = exact_div(det_poly(std::move(mp)), vsd);
  auto minus = exact_div(det_poly(std::move(mm)), vsd);
  return (plus + minus).scaled(C(1) / C(2));
}

struct CacheKey {
  TypeLabel t;
  std::vector<int> parts;
  bool operator<(const CacheKey& o) const {
    if (t != o.t) return t < o.t;
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    return parts < o.parts;
  }
};

std::map<CacheKey, std::shared_ptr<const Character>>& cache_map() {
  static std::map<CacheKey, std::shared_ptr<const Character>> m;
  return m;
}
std::shared_mutex& cache_mutex() {
  static std::shared_mutex mu;
  return mu;
}

}  // namespace

std::shared_ptr<const Character> character(TypeLabel t, const Signature& lam) {
  validate_signature(t, lam);
  CacheKey key{t, lam.parts};
  {
    std::shared_lock lock(cache_mutex());
    auto it = cache_map().find(key);
    if (it != cache_map().end()) return it->second;
  }
  auto poly = build_character<Rational>(t, lam);
  // top weight is lambda with coefficient 1 (types B/C/D and dominant A)
  if (lam.rank() > 0 && lam.valid_nonneg()) {
    auto lead = poly.leading_dominant_term();
    if (!lead || lead->first != lam.parts || lead->second != 1)
      throw invariant_violation("character top weight is not lambda with coefficient 1: " +
                                type_name(t) + " " + lam.to_string());
  }
  auto ch = std::make_shared<Character>(Character{t, lam, std::move(poly)});
  std::unique_lock lock(cache_mutex());
  auto [it, inserted] = cache_map().emplace(key, ch);
  return it->second;
}

LaurentPolyF character_float(TypeLabel t, const Signature& lam) {
  validate_signature(t, lam);
  return build_character<double>(t, lam);
}

LaurentPoly basis_poly(TypeLabel t, const Signature& lam) {
  if (t != TypeLabel::D) return character(t, lam)->poly;
  validate_signature(t, lam);
  if (!lam.valid_nonneg()) throw usage_error("symmetrized basis wants a nonnegative signature");
  const int n = lam.rank();
  if (n == 0) return LaurentPoly::constant(0, Rational(1));
  // det[z^m + z^-m]/V^s equals f_lambda + f_lambda~, which is 2 f_lambda
  // when the last part vanishes; the basis uses f_lambda itself there.
  std::vector<std::vector<LaurentPoly>> mp(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      mp[i - 1][j - 1] =
          cosine_entry<Rational>(n, j - 1, 2 * lam.parts[i - 1] + c_shift2(TypeLabel::D, n - i + 1));
  auto p = exact_div(det_poly(std::move(mp)), weyl_denominator(TypeLabel::C, n));
  if (lam.parts.back() == 0) p = p.scaled(Rational(1, 2));
  return p;
}

Rational qdimension(TypeLabel t, const Signature& lam, const BaseParam& base) {
  auto value = character(t, lam)->poly.evaluate(scaled_points_exact(t, lam.rank(), base));
  if (!(value > 0)) throw invariant_violation("nonpositive quantum dimension");
  return value;
}

Rational basis_qdimension(TypeLabel t, const Signature& lam, const BaseParam& base) {
  auto value = basis_poly(t, lam).evaluate(scaled_points_exact(t, lam.rank(), base));
  if (!(value > 0)) throw invariant_violation("nonpositive basis normalizer");
  return value;
}

std::complex<double> normalized_character_eval(TypeLabel t, const Signature& lam,
                                               const std::vector<std::complex<double>>& z,
                                               const BaseParam& base) {
  const int n = lam.rank();
  if (static_cast<int>(z.size()) != n) throw usage_error("torus point has wrong length");
  std::vector<std::complex<double>> pt(n);
  for (int i = 0; i < n; ++i) pt[i] = to_double(scaled_point(t, n, i + 1, base)) * z[i];
  std::vector<std::complex<double>> pt1(n);
  for (int i = 0; i < n; ++i) pt1[i] = to_double(scaled_point(t, n, i + 1, base));

  if (t == TypeLabel::D) {
    const auto& f = character(t, lam)->poly;
    const auto& ft = character(t, lam.tilde())->poly;
    auto numv = evaluate_complex(f, pt) + evaluate_complex(ft, pt);
    auto denv = evaluate_complex(f, pt1) + evaluate_complex(ft, pt1);
    return numv / denv;
  }
  const auto& f = character(t, lam)->poly;
  return evaluate_complex(f, pt) / evaluate_complex(f, pt1);
}

bool type_d_remark_check(const Signature& lam) {
  if (!lam.valid_nonneg()) throw usage_error("remark check wants a nonnegative signature");
  const int n = lam.rank();
  auto lhs = character(TypeLabel::D, lam)->poly + character(TypeLabel::D, lam.tilde())->poly;
  std::vector<std::vector<LaurentPoly>> mp(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      mp[i - 1][j - 1] =
          cosine_entry<Rational>(n, j - 1, 2 * lam.parts[i - 1] + c_shift2(TypeLabel::D, n - i + 1));
  auto rhs = exact_div(det_poly(std::move(mp)), weyl_denominator(TypeLabel::C, n));
  return lhs == rhs;
}

Rational torus_orthogonality_check(TypeLabel t, const Signature& lam, const Signature& mu) {
  if (t != TypeLabel::B && t != TypeLabel::C) throw usage_error("orthogonality check is for types B, C");
  const int n = lam.rank();
  if (mu.rank() != n) throw usage_error("rank mismatch");
  if (n > 3) throw usage_error("orthogonality check is desk-scale (rank <= 3)");
  std::vector<int> l(n), m(n);
  for (int i = 0; i < n; ++i) {
    l[i] = 2 * lam.parts[i] + c_shift2(t, n - i);
    m[i] = 2 * mu.parts[i] + c_shift2(t, n - i);
  }
  // (1/(N! 2^N)) sum over permutations and sign choices of the Fourier
  // pairing of det[z^l - z^-l] with its mu partner
  long acc_num = 0;
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto perm_sign = [](const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) s = -s;
    return s;
  };
  for (const auto& sg : perms) {
    for (const auto& tu : perms) {
      const int base_sign = perm_sign(sg) * perm_sign(tu);
      // per-variable pairing of (z^{s a} with s sign) against conj(z^{s' b})
      long prod = 1;
      for (int j = 0; j < n && prod != 0; ++j) {
        const int a = l[sg[j]], b = m[tu[j]];
        long pair = 0;
        for (int s : {1, -1})
          for (int s2 : {1, -1})
            if (s * a == s2 * b) pair += s * s2;
        prod *= pair;
      }
      acc_num += base_sign * prod;
    }
  }
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Rational total(acc_num, fact * (1L << n));
  total.canonicalize();
  Rational delta = (lam == mu) ? Rational(1) : Rational(0);
  Rational dev = total - delta;
  return dev < 0 ? Rational(-dev) : dev;
}

Rational classical_weyl_dimension(TypeLabel t, const Signature& lam) {
  const int n = lam.rank();
  if (n == 0) return Rational(1);
  Rational dim(1);
  auto add_ratio = [&](long a, long b) { dim *= Rational(a, b); };
  switch (t) {
    case TypeLabel::A: {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          add_ratio(lam.parts[i - 1] - lam.parts[j - 1] + j - i, j - i);
      break;
    }
    case TypeLabel::B: {
      // l_i = lambda_i + N - i + 1/2, doubled to stay integral
      std::vector<long> tl(n), t0(n);
      for (int i = 1; i <= n; ++i) {
        tl[i - 1] = 2L * lam.parts[i - 1] + 2 * (n - i) + 1;
        t0[i - 1] = 2L * (n - i) + 1;
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          add_ratio(tl[i] * tl[i] - tl[j] * tl[j], t0[i] * t0[i] - t0[j] * t0[j]);
      for (int i = 0; i < n; ++i) add_ratio(tl[i], t0[i]);
      break;
    }
    case TypeLabel::C: {
      std::vector<long> tl(n), t0(n);
      for (int i = 1; i <= n; ++i) {
        tl[i - 1] = lam.parts[i - 1] + n - i + 1;
        t0[i - 1] = n - i + 1;
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          add_ratio(tl[i] * tl[i] - tl[j] * tl[j], t0[i] * t0[i] - t0[j] * t0[j]);
      for (int i = 0; i < n; ++i) add_ratio(tl[i], t0[i]);
      break;
    }
    case TypeLabel::D: {
      if (n == 1) return Rational(1);
      std::vector<long> tl(n), t0(n);
      for (int i = 1; i <= n; ++i) {
        tl[i - 1] = lam.parts[i - 1] + n - i;
        t0[i - 1] = n - i;
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          add_ratio(tl[i] * tl[i] - tl[j] * tl[j], t0[i] * t0[i] - t0[j] * t0[j]);
      break;
    }
  }
  dim.canonicalize();
  return dim;
}

size_t character_cache_size() {
  std::shared_lock lock(cache_mutex());
  return cache_map().size();
}

void save_character_cache(const std::string& path) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  {
    std::shared_lock lock(cache_mutex());
    for (const auto& [key, ch] : cache_map()) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [e, c] : ch->poly.terms())
        terms.push_back({{"exp", e}, {"coef", rational_to_string(c)}});
      items.push_back({{"type", type_name(key.t)},
                       {"lambda", key.parts},
                       {"vars", ch->poly.vars()},
                       {"terms", std::move(terms)}});
    }
  }
  std::ofstream out(path);
  if (!out) throw error("cannot write cache file: " + path);
  out << items.dump();
}

void load_character_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // no cache yet
  nlohmann::json items = nlohmann::json::parse(in, nullptr, true, true);
  std::unique_lock lock(cache_mutex());
  for (const auto& item : items) {
    Signature lam(item.at("lambda").get<std::vector<int>>());
    TypeLabel t = parse_type(item.at("type").get<std::string>());
    LaurentPoly poly(item.at("vars").get<int>());
    for (const auto& term : item.at("terms"))
      poly.add_term(term.at("exp").get<std::vector<int>>(),
                    rational_from_string(term.at("coef").get<std::string>()));
    auto ch = std::make_shared<Character>(Character{t, lam, std::move(poly)});
    cache_map().emplace(CacheKey{t, lam.parts}, std::move(ch));
  }
}

}  // namespace qgt
