#include "permlat/polynomial.hpp"

#include <stdexcept>

namespace permlat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> ascending) : coeffs_(ascending) { trim(); }

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree + 1), 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::from_roots(const std::vector<int>& roots) {
  IntPolynomial out = constant(1);
  for (int r : roots) out = out * IntPolynomial({-static_cast<std::int64_t>(r), 1});
  return out;
}

std::int64_t IntPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = checked_add(checked_mul(value, x), *it);
  return value;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] = checked_sub(coeffs_[k], other.coeffs_[k]);
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const std::int64_t magnitude = c < 0 ? -c : c;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (magnitude != 1 || d == 0) out += std::to_string(magnitude);
    if (d >= 1) out += variable;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string factored_string(const std::vector<int>& roots, const std::string& variable) {
  if (roots.empty()) return "1";
  std::string out;
  for (int r : roots) {
    out += "(" + variable + (r < 0 ? "+" : "-") + std::to_string(r < 0 ? -r : r) + ")";
  }
  return out;
}

}  // namespace permlat
