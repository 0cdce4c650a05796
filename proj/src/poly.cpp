#include "g2cub/poly.hpp"

#include <cstdio>
#include <vector>

namespace g2cub {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::strong_ordering star_cmp(const MIndex& a, const MIndex& b) {
  if (auto c = a.mdeg() <=> b.mdeg(); c != 0) return c;
  return b.k1 <=> a.k1;
}

std::vector<MIndex> star_level(int n) {
  std::vector<MIndex> out;
  if (n < 0) return out;
  for (int k1 = n / 2; k1 >= 0; --k1) {
    int rest = n - 2 * k1;
    if (rest % 3 == 0) out.push_back(MIndex{k1, rest / 3});
  }
  return out;
}

std::vector<MIndex> star_sequence(int max_mdeg) {
  std::vector<MIndex> out;
  for (int n = 0; n <= max_mdeg; ++n) {
    auto lvl = star_level(n);
    out.insert(out.end(), lvl.begin(), lvl.end());
  }
  return out;
}

DPoly to_double(const RPoly& p) {
  return p.map([](const Rational& c) { return to_double(c); });
}

double eval(const DPoly& p, double x, double y) {
  int mi = 0, mj = 0;
  for (const auto& [e, c] : p.terms()) {
    mi = std::max(mi, e.first);
    mj = std::max(mj, e.second);
  }
  std::vector<long double> px(mi + 1, 1.0L), py(mj + 1, 1.0L);
  for (int i = 1; i <= mi; ++i) px[i] = px[i - 1] * x;
  for (int j = 1; j <= mj; ++j) py[j] = py[j - 1] * y;
  long double s = 0;
  for (const auto& [e, c] : p.terms()) s += static_cast<long double>(c) * px[e.first] * py[e.second];
  return static_cast<double>(s);
}

double eval(const RPoly& p, double x, double y) { return eval(to_double(p), x, y); }

double max_abs_coeff(const DPoly& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c));
  return m;
}

namespace {

std::string monomial_str(int i, int j) {
  std::string s;
  if (i > 0) s += (i == 1) ? "x" : "x^" + std::to_string(i);
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += (j == 1) ? "y" : "y^" + std::to_string(j);
  }
  return s;
}

template <class T, class Fmt>
std::string render(const BivarPoly<T>& p, Fmt&& fmt_abs) {
  auto terms = p.star_sorted();
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c < T(0);
    T a = neg ? T(-c) : c;
    std::string mono = monomial_str(m.k1, m.k2);
    std::string coef = fmt_abs(a);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += coef;
    else if (coef == "1")
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

}  // namespace

std::string to_string(const RPoly& p) {
  return render(p, [](const Rational& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return "(" + numerator(a).str() + "/" + denominator(a).str() + ")";
  });
}

std::string to_string(const DPoly& p) {
  return render(p, [](double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return std::string(buf);
  });
}

}  // namespace g2cub
