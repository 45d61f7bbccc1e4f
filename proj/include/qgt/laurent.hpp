#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qgt/errors.hpp"
#include "qgt/rational.hpp"

namespace qgt {

// Exponent vector of a Laurent monomial; lexicographic order comes from
// std::vector's operator<.
using ExponentVec = std::vector<int>;

inline bool is_dominant(const ExponentVec& e) {
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) return false;
    if (i + 1 < e.size() && e[i] < e[i + 1]) return false;
  }
  return true;
}

namespace detail {

template <class C>
struct coef_traits {
  static bool is_zero(const C& c) { return c == 0; }
};

template <>
struct coef_traits<double> {
  // float mirror drops terms that are negligible relative to the scale seen
  static bool is_zero(const double& c) { return c == 0.0; }
};

template <class C>
C coef_pow(const C& base, long e) {
  if constexpr (std::is_same_v<C, Rational>) {
    return pow_rational(base, e);
  } else {
    return std::pow(base, static_cast<double>(e));
  }
}

}  // namespace detail

// Multivariate Laurent polynomial with canonical term storage: a map from
// exponent vector to nonzero coefficient, iterated in lexicographic order so
// every output is reproducible byte for byte. Immutable in spirit: all
// operations return new values.
template <class C>
class BasicLaurentPoly {
 public:
  using term_map = std::map<ExponentVec, C>;

  BasicLaurentPoly() : vars_(0) {}
  explicit BasicLaurentPoly(int vars) : vars_(vars) {
    if (vars < 0) throw error("negative variable count");
  }

  static BasicLaurentPoly constant(int vars, const C& c) {
    BasicLaurentPoly p(vars);
    if (!detail::coef_traits<C>::is_zero(c)) p.terms_.emplace(ExponentVec(vars, 0), c);
    return p;
  }

  static BasicLaurentPoly monomial(int vars, ExponentVec e, const C& c) {
    if (static_cast<int>(e.size()) != vars) throw error("exponent length mismatch");
    BasicLaurentPoly p(vars);
    if (!detail::coef_traits<C>::is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  static BasicLaurentPoly variable(int vars, int i, int power = 1) {
    ExponentVec e(vars, 0);
    e.at(i) = power;
    return monomial(vars, std::move(e), C(1));
  }

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }

  bool operator==(const BasicLaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const BasicLaurentPoly& o) const { return !(*this == o); }

  void add_term(const ExponentVec& e, const C& c) {
    if (static_cast<int>(e.size()) != vars_) throw error("exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!detail::coef_traits<C>::is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (detail::coef_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicLaurentPoly operator+(const BasicLaurentPoly& o) const {
    check_same_vars(o);
    BasicLaurentPoly out(*this);
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
  }

  BasicLaurentPoly operator-() const {
    BasicLaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  BasicLaurentPoly operator-(const BasicLaurentPoly& o) const {
    check_same_vars(o);
    BasicLaurentPoly out(*this);
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
  }

  BasicLaurentPoly operator*(const BasicLaurentPoly& o) const {
    check_same_vars(o);
    BasicLaurentPoly out(vars_);
    ExponentVec e(vars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        for (int i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
        out.add_term(e, c1 * c2);
      }
    }
    return out;
  }

  BasicLaurentPoly scaled(const C& c) const {
    BasicLaurentPoly out(vars_);
    if (detail::coef_traits<C>::is_zero(c)) return out;
    for (const auto& [e, cc] : terms_) {
      C v = cc * c;
      if (!detail::coef_traits<C>::is_zero(v)) out.terms_.emplace(e, v);
    }
    return out;
  }

  // Fixes the last variable at a nonzero scalar; the result lives in one
  // fewer variable. A 0-variable polynomial is a constant.
  BasicLaurentPoly substitute_last(const C& value) const {
    if (vars_ < 1) throw error("substitute_last on 0-variable polynomial");
    BasicLaurentPoly out(vars_ - 1);
    for (const auto& [e, c] : terms_) {
      ExponentVec head(e.begin(), e.end() - 1);
      out.add_term(head, c * detail::coef_pow(value, e.back()));
    }
    return out;
  }

  // t_i -> scale * t_i
  BasicLaurentPoly scale_var(int i, const C& scale) const {
    BasicLaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * detail::coef_pow(scale, e.at(i)));
    return out;
  }

  // t_i -> t_i^{-1}
  BasicLaurentPoly invert_var(int i) const {
    BasicLaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      ExponentVec f = e;
      f.at(i) = -f.at(i);
      out.add_term(f, c);
    }
    return out;
  }

  BasicLaurentPoly permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != vars_) throw error("permutation size mismatch");
    BasicLaurentPoly out(vars_);
    ExponentVec f(vars_);
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < vars_; ++i) f[perm[i]] = e[i];
      out.add_term(f, c);
    }
    return out;
  }

  template <class S>
  S evaluate(const std::vector<S>& point) const {
    if (static_cast<int>(point.size()) != vars_) throw error("evaluation point length mismatch");
    for (const auto& x : point)
      if (x == S(0)) throw error("evaluation at a zero coordinate");
    S acc(0);
    for (const auto& [e, c] : terms_) {
      S term;
      if constexpr (std::is_same_v<C, Rational> && !std::is_same_v<S, Rational>) {
        term = S(to_double(c));
      } else {
        term = S(c);
      }
      for (int i = 0; i < vars_; ++i) {
        if (e[i] == 0) continue;
        S p = point[i];
        long k = e[i];
        if (k < 0) {
          p = S(1) / p;
          k = -k;
        }
        for (; k > 0; --k) term *= p;
      }
      acc += term;
    }
    return acc;
  }

  std::optional<std::pair<ExponentVec, C>> leading_term() const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.rbegin();
    return std::make_pair(it->first, it->second);
  }

  // Lexicographically maximal exponent lying in the dominant cone (weakly
  // decreasing, all entries >= 0), if any.
  std::optional<std::pair<ExponentVec, C>> leading_dominant_term() const {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      if (is_dominant(it->first)) return std::make_pair(it->first, it->second);
    return std::nullopt;
  }

  // per-variable exponent extremes; poly must be nonzero
  std::pair<ExponentVec, ExponentVec> exponent_box() const {
    if (terms_.empty()) throw error("exponent_box of zero polynomial");
    ExponentVec lo = terms_.begin()->first, hi = lo;
    for (const auto& [e, c] : terms_) {
      (void)c;
      for (int i = 0; i < vars_; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    return {lo, hi};
  }

 private:
  void check_same_vars(const BasicLaurentPoly& o) const {
    if (vars_ != o.vars_) throw error("variable-count mismatch");
  }

  int vars_;
  term_map terms_;
};

using LaurentPoly = BasicLaurentPoly<Rational>;
using LaurentPolyF = BasicLaurentPoly<double>;

// Exact quotient num/den; throws not_divisible when no exact quotient exists.
// Leading-term elimination in lex order: for exact quotients the leading
// monomials multiply without cancellation, so each step emits one quotient
// term and the emitted exponents stay inside the Minkowski box
// [lo(num)-lo(den), hi(num)-hi(den)], which bounds the iteration.
template <class C>
BasicLaurentPoly<C> exact_div(const BasicLaurentPoly<C>& num, const BasicLaurentPoly<C>& den) {
  if (num.vars() != den.vars()) throw error("variable-count mismatch");
  if (den.is_zero()) throw error("division by zero polynomial");
  BasicLaurentPoly<C> quotient(num.vars());
  if (num.is_zero()) return quotient;

  const auto [nlo, nhi] = num.exponent_box();
  const auto [dlo, dhi] = den.exponent_box();
  ExponentVec qlo(num.vars()), qhi(num.vars());
  for (int i = 0; i < num.vars(); ++i) {
    qlo[i] = nlo[i] - dlo[i];
    qhi[i] = nhi[i] - dhi[i];
    if (qlo[i] > qhi[i]) throw not_divisible("quotient exponent box is empty");
  }

  const auto dl = den.leading_term().value();
  BasicLaurentPoly<C> rem = num;
  [[maybe_unused]] double scale = 1.0;
  if constexpr (std::is_same_v<C, double>) {
    for (const auto& [e, c] : num.terms()) scale = std::max(scale, std::abs(c));
  }
  while (!rem.is_zero()) {
    auto rl = rem.leading_term().value();
    if constexpr (std::is_same_v<C, double>) {
      // drop numerically dead leading terms in the float mirror
      if (std::abs(rl.second) < 1e-12 * scale) {
        BasicLaurentPoly<C> cleaned(rem.vars());
        for (const auto& [e, c] : rem.terms())
          if (std::abs(c) >= 1e-12 * scale) cleaned.add_term(e, c);
        rem = cleaned;
        if (rem.is_zero()) break;
        rl = rem.leading_term().value();
      }
    }
    ExponentVec qe(num.vars());
    for (int i = 0; i < num.vars(); ++i) {
      qe[i] = rl.first[i] - dl.first[i];
      if (qe[i] < qlo[i] || qe[i] > qhi[i]) throw not_divisible("no exact quotient");
    }
    C qc = rl.second / dl.second;
    quotient.add_term(qe, qc);
    rem = rem - den * BasicLaurentPoly<C>::monomial(num.vars(), qe, qc);
  }
  return quotient;
}

inline std::complex<double> evaluate_complex(const LaurentPoly& p,
                                             const std::vector<std::complex<double>>& point) {
  return p.template evaluate<std::complex<double>>(point);
}

inline LaurentPolyF to_float_poly(const LaurentPoly& p) {
  LaurentPolyF out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_double(c));
  return out;
}

}  // namespace qgt
