#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace permlat {

// Univariate polynomial with exact 64-bit integer coefficients.  Arithmetic
// throws std::overflow_error instead of wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero
  // Coefficients in ascending degree order; trailing zeros are dropped.
  explicit IntPolynomial(std::vector<std::int64_t> ascending);
  IntPolynomial(std::initializer_list<std::int64_t> ascending);

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(int degree, std::int64_t c = 1);
  // (t - r_1)(t - r_2)...(t - r_k)
  static IntPolynomial from_roots(const std::vector<int>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int degree) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t evaluate(std::int64_t x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  // Descending, e.g. "t^4-4t^3+5t^2-2t"; "0" for the zero polynomial.
  std::string to_string(const std::string& variable = "t") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

// "(t-0)(t-1)(t-1)(t-2)"; roots printed in the given order.
std::string factored_string(const std::vector<int>& roots, const std::string& variable = "t");

}  // namespace permlat
