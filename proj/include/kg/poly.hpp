#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kg/rational.hpp"

namespace kg {

// Dense univariate polynomial with exact rational coefficients.
// Coefficient i multiplies x^i; the top stored coefficient is nonzero (the
// zero polynomial stores nothing), so operator== is canonical equality.
// Values are immutable from the caller's point of view: every operation
// returns a fresh polynomial.
class Poly {
  public:
    Poly() = default;
    explicit Poly(QQ constant) : coeffs_{std::move(constant)} { trim(); }
    explicit Poly(std::vector<QQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<QQ> coeffs) : coeffs_(coeffs) { trim(); }

    /// The monomial x.
    static Poly x() { return Poly{QQ(0), QQ(1)}; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, with -1 standing in for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i (0 beyond the degree).
    QQ coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : QQ(0); }

    std::span<const QQ> coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const QQ& s) const;
    friend Poly operator*(const QQ& s, const Poly& p) { return p * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const QQ& s) { return *this = *this * s; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Horner evaluation.
    QQ eval(const QQ& x) const;

    /// Formal derivative.
    Poly derivative() const;

    /// p(x + c).
    Poly taylor_shift(const QQ& c) const;

    /// All odd-index (resp. even-index) coefficients vanish.
    bool is_even_function() const;
    bool is_odd_function() const;

    /// Debug rendering, e.g. "-5/12*x + 1/6*x^3".
    std::string str() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<QQ> coeffs_;
};

/// binom(c + s*x, k) as a degree-k polynomial in x (s = +1 or -1), i.e. the
/// falling-factorial product (c + s*x)(c + s*x - 1)...(c + s*x - k + 1) / k!.
Poly binom_poly(const QQ& c, int s, unsigned k);

}  // namespace kg
