#include "jml/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace jml {

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().isZero())
        coeffs_.pop_back();
}

Poly Poly::monomial(const Scalar& c, int degree)
{
    if (c.isZero())
        return {};
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Poly(std::move(v));
}

int Poly::lowDegree() const
{
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[k].isZero())
        ++k;
    return k;
}

Poly Poly::monic() const
{
    if (isZero() || lead().isOne())
        return *this;
    Poly r = *this;
    r *= lead().inverse();
    return r;
}

Scalar Poly::eval(const Scalar& x) const
{
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
    return Poly(std::move(d));
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (isZero() || o.isZero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].isZero())
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (!o.coeffs_[j].isZero())
                r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& s)
{
    if (s.isZero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    trim();
    return *this;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const
{
    if (d.isZero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem = coeffs_;
    int dd = d.degree();
    if (degree() < dd) {
        q = Poly();
        r = *this;
        return;
    }
    std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd) + 1, Scalar(0));
    Scalar inv = d.lead().inverse();
    for (int k = degree(); k >= dd; --k) {
        if (rem[k].isZero())
            continue;
        Scalar c = rem[k] * inv;
        int shift = k - dd;
        for (int j = 0; j <= dd; ++j)
            if (!d.coeffs_[j].isZero())
                rem[shift + j] -= c * d.coeffs_[j];
        quot[shift] = std::move(c);
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly Poly::operator/(const Poly& d) const
{
    Poly q, r;
    divmod(d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const
{
    Poly q, r;
    divmod(d, q, r);
    return r;
}

bool Poly::divisibleBy(const Poly& d) const
{
    if (d.isZero())
        return isZero();
    return (*this % d).isZero();
}

Poly Poly::stripT() const
{
    int k = lowDegree();
    if (k == 0 || isZero())
        return *this;
    return Poly(std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()));
}

Poly Poly::shifted(int k) const
{
    if (isZero() || k == 0)
        return *this;
    if (k < 0)
        throw std::invalid_argument("negative shift");
    std::vector<Scalar> v(static_cast<std::size_t>(k), Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

namespace {

std::string coeffText(const Scalar& c)
{
    std::string s = c.str();
    bool compound = s.find_first_of("+-* ", 1) != std::string::npos;
    return compound ? "(" + s + ")" : s;
}

}  // namespace

std::string Poly::str(const std::string& var) const
{
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeffs_[k];
        if (c.isZero())
            continue;
        std::string body;
        if (k == 0) {
            body = coeffText(c);
        } else {
            std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
            if (c.isOne())
                body = mono;
            else if ((-c).isOne())
                body = "-" + mono;
            else
                body = coeffText(c) + "*" + mono;
        }
        if (first) {
            os << body;
        } else if (body[0] == '-') {
            os << " - " << body.substr(1);
        } else {
            os << " + " << body;
        }
        first = false;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b)
{
    while (!b.isZero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// expr := term (('+'|'-') term)* ; term := unary ('*'? unary)* ;
// unary := '-' unary | power ; power := atom ('^' digits)? ;
// atom := rational | 'i' | variable | '(' expr ')'
class PolyParser
{
public:
    explicit PolyParser(std::string s) : s_(std::move(s)) {}

    Poly run()
    {
        Poly p = expr();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("cannot parse polynomial '" + s_ + "': " + why);
    }
    bool more() const { return pos_ < s_.size(); }
    char peek() const { return more() ? s_[pos_] : '\0'; }

    Poly expr()
    {
        Poly p = term();
        while (peek() == '+' || peek() == '-') {
            char op = s_[pos_++];
            Poly q = term();
            if (op == '+')
                p += q;
            else
                p -= q;
        }
        return p;
    }

    Poly term()
    {
        Poly p = unary();
        while (more()) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p *= unary();
            } else if (c == '(' || c == 'i' || c == 't' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
                p *= unary();
            } else {
                break;
            }
        }
        return p;
    }

    Poly unary()
    {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power()
    {
        Poly base = atom();
        if (peek() != '^')
            return base;
        ++pos_;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("exponent must be a nonnegative integer");
        int e = std::stoi(s_.substr(start, pos_ - start));
        Poly r(1);
        for (int k = 0; k < e; ++k)
            r *= base;
        return r;
    }

    Poly atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (peek() != ')')
                fail("missing ')'");
            ++pos_;
            return p;
        }
        if (c == 'i') {
            ++pos_;
            return Poly(Scalar::i());
        }
        if (c == 't' || c == 'x') {
            ++pos_;
            return Poly::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
            }
            return Poly(Scalar::parse(s_.substr(start, pos_ - start)));
        }
        fail(more() ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("empty polynomial");
    return PolyParser(std::move(s)).run();
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(Poly p, int low) : body_(std::move(p)), low_(low) { normalize(); }

void LaurentPoly::normalize()
{
    if (body_.isZero()) {
        low_ = 0;
        return;
    }
    int k = body_.lowDegree();
    if (k > 0) {
        body_ = body_.stripT();
        low_ += k;
    }
}

Poly LaurentPoly::toPoly(int k) const
{
    if (isZero())
        return {};
    if (low_ + k < 0)
        throw std::invalid_argument("Laurent polynomial has negative powers after shift");
    return body_.shifted(low_ + k);
}

Scalar LaurentPoly::eval(const Scalar& x) const { return body_.eval(x) * x.pow(low_); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.isZero())
        return *this;
    if (isZero())
        return *this = o;
    int low = std::min(low_, o.low_);
    Poly sum = body_.shifted(low_ - low) + o.body_.shifted(o.low_ - low);
    *this = LaurentPoly(std::move(sum), low);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    body_ *= o.body_;
    low_ += o.low_;
    normalize();
    return *this;
}

std::string LaurentPoly::str(const std::string& var) const
{
    if (isZero())
        return "0";
    if (low_ == 0)
        return body_.str(var);
    std::string p = body_.str(var);
    std::string unit = var + "^" + std::to_string(low_);
    if (body_.isOne())
        return unit;
    return unit + "*(" + p + ")";
}

}  // namespace jml
