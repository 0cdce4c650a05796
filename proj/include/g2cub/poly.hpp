#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2cub {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

// Exponent pair / polynomial index with m-degree 2 k1 + 3 k2.
struct MIndex {
  int k1 = 0, k2 = 0;
  int mdeg() const { return 2 * k1 + 3 * k2; }
  bool operator==(const MIndex&) const = default;
};

// *-order: graded by m-degree; within a degree the larger k1 comes first.
std::strong_ordering star_cmp(const MIndex& a, const MIndex& b);
inline bool star_less(const MIndex& a, const MIndex& b) { return star_cmp(a, b) < 0; }

// All indices with m-degree <= max_mdeg, in *-order.
std::vector<MIndex> star_sequence(int max_mdeg);
// Indices with m-degree exactly n, in *-order.
std::vector<MIndex> star_level(int n);

template <class T>
class BivarPoly {
 public:
  using Exp = std::pair<int, int>;
  using Terms = std::map<Exp, T>;

  BivarPoly() = default;
  explicit BivarPoly(T c) { set(0, 0, std::move(c)); }

  static BivarPoly monomial(int i, int j, T c = T(1)) {
    BivarPoly p;
    p.set(i, j, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  T coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? T(0) : it->second;
  }

  void set(int i, int j, T c) {
    if (c == T(0))
      terms_.erase({i, j});
    else
      terms_[{i, j}] = std::move(c);
  }

  void add_term(int i, int j, const T& c) {
    if (c == T(0)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == T(0)) terms_.erase(it);
    }
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, T(-c));
    return *this;
  }
  BivarPoly& operator*=(const T& s) {
    if (s == T(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const T& s) { return a *= s; }
  friend BivarPoly operator*(const T& s, BivarPoly a) { return a *= s; }
  friend BivarPoly operator-(BivarPoly a) { return a *= T(-1); }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, T(ca * cb));
    return r;
  }

  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

  // Multiply by c x^i y^j.
  BivarPoly shifted(int i, int j, const T& c = T(1)) const {
    BivarPoly r;
    if (c == T(0)) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(Exp{e.first + i, e.second + j}, T(v * c));
    return r;
  }

  BivarPoly dx() const {
    BivarPoly r;
    for (const auto& [e, c] : terms_)
      if (e.first > 0) r.set(e.first - 1, e.second, T(c * e.first));
    return r;
  }
  BivarPoly dy() const {
    BivarPoly r;
    for (const auto& [e, c] : terms_)
      if (e.second > 0) r.set(e.first, e.second - 1, T(c * e.second));
    return r;
  }

  int mdegree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, 2 * e.first + 3 * e.second);
    return d;
  }

  // Leading exponent in *-order (undefined for the zero polynomial).
  MIndex leading() const {
    MIndex best{-1, -1};
    for (const auto& [e, c] : terms_) {
      MIndex m{e.first, e.second};
      if (best.k1 < 0 || star_less(best, m)) best = m;
    }
    return best;
  }

  // Terms sorted by ascending *-order of the exponent.
  std::vector<std::pair<MIndex, T>> star_sorted() const {
    std::vector<std::pair<MIndex, T>> out;
    for (const auto& [e, c] : terms_) out.emplace_back(MIndex{e.first, e.second}, c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return star_less(a.first, b.first); });
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    BivarPoly<U> r;
    for (const auto& [e, c] : terms_) r.set(e.first, e.second, f(c));
    return r;
  }

 private:
  Terms terms_;
};

using RPoly = BivarPoly<Rational>;
using DPoly = BivarPoly<double>;

DPoly to_double(const RPoly& p);

// Evaluation with long double accumulation.
double eval(const DPoly& p, double x, double y);
double eval(const RPoly& p, double x, double y);

double max_abs_coeff(const DPoly& p);

// Pretty form, e.g. "6*x^2 - 2*x - 2*y - 1", highest *-order first.
std::string to_string(const RPoly& p);
std::string to_string(const DPoly& p);

}  // namespace g2cub
