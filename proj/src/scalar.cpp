#include "jml/scalar.hpp"

#include <cctype>
#include <sstream>

namespace jml {

// ---------------------------------------------------------------------------
// Gaussian
// ---------------------------------------------------------------------------

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gaussian Gaussian::inverse() const
{
    if (isZero())
        throw std::domain_error("division by zero");
    if (sgn(im) == 0)
        return Gaussian(1 / re);
    mpq_class n = re * re + im * im;
    return Gaussian(re / n, -im / n);
}

namespace {

std::string rationalStr(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Gaussian::str() const
{
    if (sgn(im) == 0)
        return rationalStr(re);
    std::string imPart;
    if (im == 1)
        imPart = "i";
    else if (im == -1)
        imPart = "-i";
    else
        imPart = rationalStr(im) + "*i";
    if (sgn(re) == 0)
        return imPart;
    if (imPart[0] == '-')
        return rationalStr(re) + imPart;
    return rationalStr(re) + "+" + imPart;
}

// ---------------------------------------------------------------------------
// polynomial helpers over Q(i), used by the extension arithmetic
// ---------------------------------------------------------------------------

namespace {

using GPoly = std::vector<Gaussian>;

void trim(GPoly& p)
{
    while (!p.empty() && p.back().isZero())
        p.pop_back();
}

GPoly gmul(const GPoly& a, const GPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    GPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].isZero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Returns quotient; a becomes the remainder.
GPoly gdivmod(GPoly& a, const GPoly& b)
{
    trim(a);
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size())
        return {};
    GPoly q(a.size() - b.size() + 1);
    Gaussian lead = b.back().inverse();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k].isZero())
            continue;
        Gaussian c = a[k] * lead;
        std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        if (k == 0)
            break;
    }
    trim(a);
    trim(q);
    return q;
}

GPoly gsub(GPoly a, const GPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

GPoly gderiv(const GPoly& a)
{
    GPoly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(a[i] * Gaussian(static_cast<long>(i)));
    trim(d);
    return d;
}

GPoly ggcd(GPoly a, GPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        gdivmod(a, b);
        std::swap(a, b);
    }
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtensionField
// ---------------------------------------------------------------------------

ExtensionField::ExtensionField(std::vector<Gaussian> modulus, std::string name)
    : modulus_(std::move(modulus)), name_(std::move(name))
{
    trim(modulus_);
    if (modulus_.size() < 2)
        throw std::invalid_argument("extension modulus must have degree >= 1");
    Gaussian lead = modulus_.back().inverse();
    for (auto& c : modulus_)
        c *= lead;
    if (ggcd(modulus_, gderiv(modulus_)).size() > 1)
        throw std::invalid_argument("extension modulus is not squarefree");
}

std::vector<Gaussian> ExtensionField::reduce(std::vector<Gaussian> p) const
{
    gdivmod(p, modulus_);
    p.resize(static_cast<std::size_t>(degree()));
    return p;
}

std::vector<Gaussian> ExtensionField::multiply(const std::vector<Gaussian>& a,
                                               const std::vector<Gaussian>& b) const
{
    return reduce(gmul(a, b));
}

std::vector<Gaussian> ExtensionField::inverse(const std::vector<Gaussian>& a) const
{
    // extended Euclid: s*a + t*p = g
    GPoly r0 = modulus_, r1 = a;
    trim(r1);
    if (r1.empty())
        throw std::domain_error("division by zero");
    GPoly s0, s1{Gaussian(1)};
    while (!r1.empty()) {
        GPoly rem = r0;
        GPoly q = gdivmod(rem, r1);
        GPoly s2 = gsub(s0, gmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw std::domain_error("extension modulus is reducible: found a zero divisor");
    Gaussian c = r0[0].inverse();
    for (auto& x : s0)
        x *= c;
    return reduce(std::move(s0));
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar Scalar::generator(const ExtensionPtr& ctx)
{
    std::vector<Gaussian> r(static_cast<std::size_t>(ctx->degree()));
    if (ctx->degree() == 1)
        return fromResidue(ctx, ctx->reduce({Gaussian(0), Gaussian(1)}));
    r[1] = Gaussian(1);
    return fromResidue(ctx, std::move(r));
}

Scalar Scalar::fromResidue(const ExtensionPtr& ctx, std::vector<Gaussian> coeffs)
{
    Scalar s;
    s.ctx_ = ctx;
    s.ext_ = ctx->reduce(std::move(coeffs));
    s.normalize();
    return s;
}

void Scalar::normalize()
{
    if (!ctx_)
        return;
    for (std::size_t k = 1; k < ext_.size(); ++k)
        if (!ext_[k].isZero())
            return;
    base_ = ext_.empty() ? Gaussian(0) : ext_[0];
    ctx_.reset();
    ext_.clear();
}

ExtensionPtr Scalar::joinContexts(const ExtensionPtr& a, const ExtensionPtr& b)
{
    if (!a)
        return b;
    if (!b || a == b)
        return a;
    if (a->modulus() == b->modulus())
        return a;
    throw std::invalid_argument("mixed extension-field contexts");
}

void Scalar::promote(const ExtensionPtr& ctx)
{
    if (ctx_ || !ctx)
        return;
    ext_.assign(static_cast<std::size_t>(ctx->degree()), Gaussian(0));
    ext_[0] = base_;
    ctx_ = ctx;
}

bool Scalar::isZero() const { return !ctx_ && base_.isZero(); }
bool Scalar::isOne() const { return !ctx_ && base_.isOne(); }
bool Scalar::isBase() const { return !ctx_; }

const Gaussian& Scalar::baseValue() const
{
    if (ctx_)
        throw std::logic_error("scalar is not in the base field");
    return base_;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.base_ = -r.base_;
    for (auto& c : r.ext_)
        c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (!ctx_ && !o.ctx_) {
        base_ += o.base_;
        return *this;
    }
    auto ctx = joinContexts(ctx_, o.ctx_);
    promote(ctx);
    if (o.ctx_) {
        for (std::size_t k = 0; k < ext_.size(); ++k)
            ext_[k] += o.ext_[k];
    } else {
        ext_[0] += o.base_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (!ctx_ && !o.ctx_) {
        base_ *= o.base_;
        return *this;
    }
    auto ctx = joinContexts(ctx_, o.ctx_);
    if (!o.ctx_) {
        for (auto& c : ext_)
            c *= o.base_;
    } else if (!ctx_) {
        Gaussian b = base_;
        *this = o;
        for (auto& c : ext_)
            c *= b;
    } else {
        ext_ = ctx->multiply(ext_, o.ext_);
    }
    normalize();
    return *this;
}

Scalar Scalar::inverse() const
{
    if (!ctx_)
        return Scalar(base_.inverse());
    return fromResidue(ctx_, ctx_->inverse(ext_));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Scalar result(1), b = *this;
    while (e > 0) {
        if (e & 1)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!a.ctx_ && !b.ctx_)
        return a.base_ == b.base_;
    if (!a.ctx_ || !b.ctx_)
        return false;
    Scalar::joinContexts(a.ctx_, b.ctx_);
    return a.ext_ == b.ext_;
}

std::string Scalar::str() const
{
    if (!ctx_)
        return base_.str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < ext_.size(); ++k) {
        if (ext_[k].isZero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        std::string c = ext_[k].str();
        bool compound = sgn(ext_[k].re) != 0 && sgn(ext_[k].im) != 0;
        if (k == 0) {
            os << c;
            continue;
        }
        if (!ext_[k].isOne())
            os << (compound ? "(" + c + ")" : c) << "*";
        os << ctx_->name();
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

mpq_class parseRational(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational");
    std::string text(s);
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (text.find('/') != std::string::npos && q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("empty scalar");

    // split into signed terms
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if ((c == '+' || c == '-') && k > 0 && s[k - 1] != '/' && s[k - 1] != '*') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    terms.push_back(cur);

    mpq_class re = 0, im = 0;
    for (std::string t : terms) {
        bool neg = false;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            neg = t[0] == '-';
            t.erase(0, 1);
        }
        if (t.empty())
            throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
        bool imag = false;
        if (t.back() == 'i') {
            imag = true;
            t.pop_back();
            if (!t.empty() && t.back() == '*')
                t.pop_back();
        }
        mpq_class v = (imag && t.empty()) ? mpq_class(1) : parseRational(t);
        if (neg)
            v = -v;
        (imag ? im : re) += v;
    }
    return Scalar(re, im);
}

}  // namespace jml
