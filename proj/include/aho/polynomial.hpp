#pragma once

// Dense univariate polynomial with real coefficients, templated on the
// scalar type so the expansion can also run on forward-mode dual numbers.
// Coefficients are stored ascending: c[p] multiplies x^p. The trailing
// coefficient is kept nonzero except for the canonical zero polynomial {0}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace aho {

inline double scalar_value(double x) { return x; }
inline bool finite_value(double x) { return std::isfinite(x); }

template <class T = double>
class Polynomial {
 public:
  Polynomial() : c_{T{}} {}
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(T{});
    trim();
  }
  Polynomial(std::initializer_list<T> coeffs) : Polynomial(std::vector<T>(coeffs)) {}

  static Polynomial monomial(int p, T coeff = T{1}) {
    std::vector<T> c(static_cast<std::size_t>(p) + 1, T{});
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == T{}; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int p) const {
    return (p >= 0 && p < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(p)] : T{};
  }

  // Horner evaluation.
  T operator()(T x) const {
    T acc = c_.back();
    for (int p = degree() - 1; p >= 0; --p) acc = acc * x + c_[static_cast<std::size_t>(p)];
    return acc;
  }

  Polynomial derivative() const {
    if (degree() == 0) return Polynomial{};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t p = 1; p < c_.size(); ++p) d[p - 1] = T(static_cast<double>(p)) * c_[p];
    return Polynomial(std::move(d));
  }

  // scale * x^j * this
  Polynomial times_monomial(int j, T scale = T{1}) const {
    if (is_zero()) return Polynomial{};
    std::vector<T> r(c_.size() + static_cast<std::size_t>(j), T{});
    for (std::size_t p = 0; p < c_.size(); ++p) r[p + static_cast<std::size_t>(j)] = scale * c_[p];
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
    for (std::size_t p = 0; p < o.c_.size(); ++p) c_[p] = c_[p] + o.c_[p];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
    for (std::size_t p = 0; p < o.c_.size(); ++p) c_[p] = c_[p] - o.c_[p];
    trim();
    return *this;
  }
  Polynomial& operator*=(T s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(T s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(Polynomial p, T s) { return p *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  bool all_finite() const {
    for (const auto& c : c_)
      if (!finite_value(c)) return false;
    return true;
  }
  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(scalar_value(c)));
    return m;
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == T{}) c_.pop_back();
  }
  std::vector<T> c_;
};

}  // namespace aho
