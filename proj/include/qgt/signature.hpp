#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qgt/errors.hpp"

namespace qgt {

// Weakly decreasing integer tuple indexing an irreducible representation.
// Parts are nonnegative except where a type explicitly admits a signed last
// part (type D tilde partners, signed type A signatures).
struct Signature {
  std::vector<int> parts;

  Signature() = default;
  explicit Signature(std::vector<int> p) : parts(std::move(p)) {}

  int rank() const { return static_cast<int>(parts.size()); }
  long size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

  bool weakly_decreasing() const {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1]) return false;
    return true;
  }
  bool nonnegative() const {
    return parts.empty() || parts.back() >= 0;
  }
  bool valid_nonneg() const { return weakly_decreasing() && nonnegative(); }

  // last part negated (identity when the last part is 0)
  Signature tilde() const {
    Signature s = *this;
    if (!s.parts.empty()) s.parts.back() = -s.parts.back();
    return s;
  }

  Signature dropped_last() const {
    Signature s = *this;
    if (!s.parts.empty()) s.parts.pop_back();
    return s;
  }

  bool operator==(const Signature& o) const { return parts == o.parts; }
  bool operator!=(const Signature& o) const { return parts != o.parts; }
  // order by rank, then |lambda|, then lexicographic: the deterministic
  // enumeration/emission order used everywhere
  bool operator<(const Signature& o) const {
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    if (size() != o.size()) return size() < o.size();
    return parts < o.parts;
  }

  std::string to_string(char sep = '.') const {
    if (parts.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(parts[i]);
    }
    return s;
  }

  static Signature parse(const std::string& text, int expected_rank = -1) {
    Signature s;
    if (!(text.empty() || text == "-")) {
      size_t pos = 0;
      while (pos <= text.size()) {
        size_t next = text.find_first_of(".,", pos);
        const std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
          s.parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw usage_error("cannot parse signature part: '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    }
    if (expected_rank >= 0 && s.rank() != expected_rank)
      throw usage_error("signature " + s.to_string() + " does not have rank " + std::to_string(expected_rank));
    return s;
  }
};

// All nonnegative signatures of the given rank with |lambda| <= max_size,
// ordered by |lambda| then lexicographically.
inline std::vector<Signature> enumerate_signatures(int rank, int max_size) {
  if (rank == 0) return {Signature{}};
  std::vector<Signature> out;
  for (int total = 0; total <= max_size; ++total) {
    std::vector<Signature> level;
    std::vector<int> c(rank, 0);
    auto gen = [&](auto&& self, int pos, int remaining, int cap) -> void {
      if (pos == rank) {
        if (remaining == 0) level.push_back(Signature(c));
        return;
      }
      for (int v = std::min(remaining, cap); v >= 0; --v) {
        c[pos] = v;
        self(self, pos + 1, remaining - v, v);
      }
    };
    gen(gen, 0, total, total);
    std::sort(level.begin(), level.end(),
              [](const Signature& a, const Signature& b) { return a.parts < b.parts; });
    for (auto& s : level) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qgt
