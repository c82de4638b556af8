#pragma once

#include "jml/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jml {

/// Univariate polynomial in t over the active scalar field.
class Poly
{
public:
    Poly() = default;
    Poly(long c) : Poly(Scalar(c)) {}
    Poly(const Scalar& c)
    {
        if (!c.isZero())
            coeffs_.push_back(c);
    }
    /// Coefficients listed from the constant term upwards.
    explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    static Poly monomial(const Scalar& c, int degree);
    /// t - root
    static Poly linear(const Scalar& root) { return Poly(std::vector<Scalar>{-root, Scalar(1)}); }
    /// Parses expressions such as "t^2-3t+1", "(1/2)*t - i", "t".
    static Poly parse(std::string_view text);

    bool isZero() const { return coeffs_.empty(); }
    bool isOne() const { return coeffs_.size() == 1 && coeffs_[0].isOne(); }
    bool isConstant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar& lead() const { return coeffs_.back(); }
    Scalar coeff(int k) const { return k < static_cast<int>(coeffs_.size()) && k >= 0 ? coeffs_[k] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    /// Multiplicity of t as a factor (0 for nonzero constant term).
    int lowDegree() const;

    Poly monic() const;
    Scalar eval(const Scalar& x) const;
    Poly derivative() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    void divmod(const Poly& d, Poly& q, Poly& r) const;
    Poly operator/(const Poly& d) const;
    Poly operator%(const Poly& d) const;
    /// True when d divides *this exactly.
    bool divisibleBy(const Poly& d) const;
    /// Strips every factor of t.
    Poly stripT() const;
    Poly shifted(int k) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/**
 * Laurent polynomial t^low * p(t) in L = K[t, 1/t], normalized so that the
 * constant term of p is nonzero (or the whole value is zero).
 */
class LaurentPoly
{
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Poly(c)) {}
    LaurentPoly(const Scalar& c) : LaurentPoly(Poly(c)) {}
    LaurentPoly(Poly p, int low = 0);

    static LaurentPoly tPower(int k) { return LaurentPoly(Poly(1), k); }

    bool isZero() const { return body_.isZero(); }
    int lowExponent() const { return low_; }
    int highExponent() const { return low_ + body_.degree(); }
    const Poly& body() const { return body_; }
    /// Multiplies by t^k and returns the polynomial; requires k + low >= 0.
    Poly toPoly(int k = 0) const;
    Scalar eval(const Scalar& x) const;

    LaurentPoly operator-() const { return LaurentPoly(-body_, low_); }
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.body_ == b.body_; }

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    Poly body_;
    int low_ = 0;
};

}  // namespace jml
