#pragma once

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jml {

/// Element a + b*i of the Gaussian rationals Q(i).
struct Gaussian
{
    mpq_class re{0};
    mpq_class im{0};

    Gaussian() = default;
    Gaussian(long v) : re(v) {}
    Gaussian(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i))
    {
        re.canonicalize();
        im.canonicalize();
    }

    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool isOne() const { return re == 1 && sgn(im) == 0; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian inverse() const;

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

    std::string str() const;
};

/**
 * A simple algebraic extension K[x]/(p) of K = Q(i).
 *
 * The modulus is monic of degree >= 1. Irreducibility is the caller's
 * responsibility; construction only verifies squarefreeness, and a zero
 * divisor met during inversion raises std::domain_error.
 */
class ExtensionField
{
public:
    /// Coefficients low-to-high; normalized to monic.
    explicit ExtensionField(std::vector<Gaussian> modulus, std::string name = "x");

    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Gaussian>& modulus() const { return modulus_; }
    const std::string& name() const { return name_; }

    /// Residue of an arbitrary polynomial, length degree().
    std::vector<Gaussian> reduce(std::vector<Gaussian> p) const;
    std::vector<Gaussian> multiply(const std::vector<Gaussian>& a, const std::vector<Gaussian>& b) const;
    std::vector<Gaussian> inverse(const std::vector<Gaussian>& a) const;

private:
    std::vector<Gaussian> modulus_;
    std::string name_;
};

using ExtensionPtr = std::shared_ptr<const ExtensionField>;

/**
 * Exact field element. Without a context this is an element of Q(i);
 * with a context it is a residue class in K[x]/(p).
 *
 * Plain Q(i) values mix freely with any context (K embeds in every
 * extension). Combining two different extension contexts throws
 * std::invalid_argument.
 */
class Scalar
{
public:
    Scalar() = default;
    Scalar(long v) : base_(v) {}
    Scalar(Gaussian g) : base_(std::move(g)) {}
    Scalar(mpq_class re, mpq_class im = 0) : base_(std::move(re), std::move(im)) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    /// The generator x of the extension.
    static Scalar generator(const ExtensionPtr& ctx);
    static Scalar fromResidue(const ExtensionPtr& ctx, std::vector<Gaussian> coeffs);

    /// Parses "a/b+c/d*i", "-i", "3", "2*i", "1/2-i".
    static Scalar parse(std::string_view text);

    bool isZero() const;
    bool isOne() const;
    /// True when the value lies in Q(i) (no extension part).
    bool isBase() const;
    const Gaussian& baseValue() const;

    const ExtensionPtr& context() const { return ctx_; }
    const std::vector<Gaussian>& residue() const { return ext_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    void promote(const ExtensionPtr& ctx);
    static ExtensionPtr joinContexts(const ExtensionPtr& a, const ExtensionPtr& b);
    void normalize();

    Gaussian base_;
    ExtensionPtr ctx_;
    std::vector<Gaussian> ext_;  // used only when ctx_ is set
};

}  // namespace jml
