#pragma once

// Frozen reference values shared by the unit tests and the acceptance runner.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2cub/chebyshev.hpp"
#include "g2cub/poly.hpp"

namespace oracle {

// Parses integer-coefficient polynomials written like "36x^3-18xy-9x-6y-2".
inline g2cub::RPoly parse_poly(const std::string& s) {
  g2cub::RPoly p;
  std::size_t i = 0;
  auto digits = [&](long dflt) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return dflt;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = 10 * v + (s[i++] - '0');
    return v;
  };
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    long c = digits(1);
    int ex = 0, ey = 0;
    while (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
      char v = s[i++];
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = static_cast<int>(digits(-1));
        if (e < 0) throw std::invalid_argument("bad exponent in " + s);
      }
      (v == 'x' ? ex : ey) += e;
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw std::invalid_argument("bad polynomial " + s);
    p.add_term(ex, ey, g2cub::Rational(sign * c));
  }
  return p;
}

struct ListedPoly {
  g2cub::Family family;
  int k1, k2;
  const char* text;
};

// Every explicitly listed low-degree Chebyshev polynomial.
inline const std::vector<ListedPoly>& listed_polys() {
  using g2cub::Family;
  static const std::vector<ListedPoly> v{
      {Family::CC, 0, 0, "1"},
      {Family::CC, 1, 0, "x"},
      {Family::CC, 0, 1, "y"},
      {Family::SC, 0, 0, "1"},
      {Family::SC, 1, 0, "6x+2"},
      {Family::SC, 0, 1, "6x+3y+1"},
      {Family::CS, 0, 0, "1"},
      {Family::CS, 1, 0, "3x"},
      {Family::CS, 0, 1, "6y+2"},
      {Family::SS, 0, 0, "1"},
      {Family::SS, 1, 0, "6x+1"},
      {Family::SS, 0, 1, "6x+6y+2"},
      {Family::CC, 2, 0, "6x^2-2x-2y-1"},
      {Family::CC, 1, 1, "3xy-6x^2+x+2y+1"},
      {Family::CS, 2, 0, "18x^2-3x-6y-3"},
      {Family::CS, 1, 1, "18xy+6x-18x^2+6y+3"},
      {Family::SC, 2, 0, "36x^2-6y-3"},
      {Family::SC, 1, 1, "18xy+6x+9y+2"},
      {Family::SS, 2, 0, "36x^2-6y-3"},
      {Family::SS, 1, 1, "36xy+12x+12y+4"},
      {Family::CC, 3, 0, "36x^3-18xy-9x-6y-2"},
      {Family::CS, 3, 0, "108x^3-54xy-27x-12y-5"},
      {Family::SC, 3, 0, "216x^3-72xy-48x-24y-8"},
      {Family::SS, 3, 0, "216x^3-72xy-42x-18y-7"},
      {Family::CC, 0, 2, "6y^2+10y-72x^3+36xy+18x+3"},
      {Family::CS, 0, 2, "36y^2+36y-216x^3+108xy+54x+9"},
      {Family::SC, 0, 2, "126xy+18y^2+36y+54x+10-216x^3"},
      {Family::SS, 0, 2, "144xy+36y^2+42y-216x^3+60x+11"},
  };
  return v;
}

inline constexpr long kDims[12] = {1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19};

}  // namespace oracle
