#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace braidforge {

// Integer Laurent polynomial in one variable. Zero coefficients are never
// stored, so map equality is polynomial equality.
class LaurentPoly {
public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms) {
    for (const auto& [e, c] : terms)
      add_term(e, c);
  }

  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int exponent, std::int64_t coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i)
      r *= *this;
    return r;
  }

  // A -> A^{-1}
  LaurentPoly mirror() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
      r.add_term(-e, c);
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Ascending exponents, e.g. "-A^-2 - A^2". `var` names the variable.
  std::string to_string(const std::string& var = "A") const {
    if (terms_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const std::int64_t mag = c < 0 ? -c : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1)
        os << mag;
      os << var;
      if (e != 1)
        os << '^' << e;
    }
    return os.str();
  }

private:
  Terms terms_;
};

// Renders p(A) under A = t^{-1/4}. Exponents of t are printed as reduced
// fractions when they are not integral, e.g. "t^-1/2".
inline std::string jones_in_t(const LaurentPoly& p) {
  if (p.is_zero())
    return "0";
  // exponent of t in quarters is -e
  std::map<int, std::int64_t> quarters;
  for (const auto& [e, c] : p.terms())
    quarters[-e] += c;
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : quarters) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (q == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag;
    os << 't';
    const int g = std::gcd(std::abs(q), 4);
    const int num = q / g, den = 4 / g;
    if (num != 1 || den != 1) {
      os << '^' << num;
      if (den != 1)
        os << '/' << den;
    }
  }
  return os.str();
}

} // namespace braidforge
