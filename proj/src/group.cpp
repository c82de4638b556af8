#include "jml/group.hpp"

#include <cctype>
#include <stdexcept>

namespace jml {

int Representation::index(std::string_view name) const
{
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (generators[k] == name)
            return static_cast<int>(k);
    return -1;
}

Mat Representation::inverseImage(int g) const
{
    auto inv = inverse(images.at(static_cast<std::size_t>(g)));
    if (!inv)
        throw std::invalid_argument("image of generator '" + generators[g] + "' is not invertible");
    return *inv;
}

void Representation::validate() const
{
    if (n < 1)
        throw std::invalid_argument("representation dimension must be positive");
    if (images.size() != generators.size() || xi.size() != generators.size())
        throw std::invalid_argument("representation needs one image and one xi value per generator");
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (images[k].rows() != n || images[k].cols() != n)
            throw std::invalid_argument("image of '" + generators[k] + "' has shape " + images[k].shape());
        checkSingleContext(images[k]);
        if (rank(images[k]) != n)
            throw std::invalid_argument("image of '" + generators[k] + "' is not invertible");
        for (std::size_t j = 0; j < k; ++j)
            if (generators[j] == generators[k])
                throw std::invalid_argument("duplicate generator '" + generators[k] + "'");
    }
    for (const auto& rel : relators) {
        GroupToken tok = GroupToken::parse(rel, *this);
        Evaluated e = tok.evaluate(*this);
        if (e.xi != 0)
            throw std::invalid_argument("relator '" + rel + "' has nonzero xi " + std::to_string(e.xi));
        if (!(e.rho == Mat::identity(n)))
            throw std::invalid_argument("relator '" + rel + "' is not sent to the identity");
    }
}

Representation Representation::trivial(int n, std::vector<std::string> gens, std::vector<int> xi)
{
    Representation r;
    r.n = n;
    r.generators = std::move(gens);
    r.images.assign(r.generators.size(), Mat::identity(n));
    r.xi = xi.empty() ? std::vector<int>(r.generators.size(), 0) : std::move(xi);
    return r;
}

GroupToken GroupToken::generator(int g, int power)
{
    GroupToken t;
    if (power != 0)
        t.factors_.push_back(Factor{g, power, {}, 0});
    return t;
}

GroupToken GroupToken::literal(Mat m, int xi)
{
    if (!m.square() || rank(m) != m.rows())
        throw std::invalid_argument("literal token matrix must be square and invertible");
    GroupToken t;
    t.factors_.push_back(Factor{-1, 1, std::move(m), xi});
    return t;
}

GroupToken GroupToken::parse(std::string_view word, const Representation& rep)
{
    GroupToken out;
    std::size_t k = 0;
    auto isName = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (k < word.size()) {
        char c = word[k];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
            ++k;
            continue;
        }
        std::size_t start = k;
        while (k < word.size() && isName(word[k]))
            ++k;
        if (start == k)
            throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in word '" + std::string(word) + "'");
        std::string name(word.substr(start, k - start));
        int power = 1;
        if (k < word.size() && word[k] == '^') {
            ++k;
            std::size_t ps = k;
            if (k < word.size() && (word[k] == '-' || word[k] == '+'))
                ++k;
            while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k])))
                ++k;
            std::string p(word.substr(ps, k - ps));
            if (p.empty() || p == "-" || p == "+")
                throw std::invalid_argument("missing exponent in word '" + std::string(word) + "'");
            power = std::stoi(p);
        }
        if (name == "1")
            continue;
        int g = rep.index(name);
        if (g < 0)
            throw std::invalid_argument("undeclared generator '" + name + "'");
        out = out * generator(g, power);
    }
    return out;
}

GroupToken GroupToken::operator*(const GroupToken& o) const
{
    GroupToken r = *this;
    for (const auto& f : o.factors_) {
        if (f.gen >= 0 && !r.factors_.empty() && r.factors_.back().gen == f.gen) {
            r.factors_.back().power += f.power;
            if (r.factors_.back().power == 0)
                r.factors_.pop_back();
            continue;
        }
        r.factors_.push_back(f);
    }
    return r;
}

GroupToken GroupToken::inverse() const
{
    GroupToken r;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        Factor f = *it;
        if (f.gen >= 0) {
            f.power = -f.power;
        } else {
            auto inv = jml::inverse(f.matrix);
            f.matrix = *inv;
            f.xi = -f.xi;
        }
        r.factors_.push_back(std::move(f));
    }
    return r;
}

Evaluated GroupToken::evaluate(const Representation& rep) const
{
    Evaluated e{Mat::identity(rep.n), 0};
    for (const auto& f : factors_) {
        if (f.gen < 0) {
            if (f.matrix.rows() != rep.n)
                throw std::invalid_argument("literal token of size " + f.matrix.shape() + " in a rank " +
                                            std::to_string(rep.n) + " representation");
            e.rho = e.rho * f.matrix;
            e.xi += f.xi;
            continue;
        }
        if (f.gen >= static_cast<int>(rep.generators.size()))
            throw std::invalid_argument("token references an undeclared generator");
        Mat base = f.power > 0 ? rep.images[f.gen] : rep.inverseImage(f.gen);
        int times = f.power > 0 ? f.power : -f.power;
        for (int k = 0; k < times; ++k)
            e.rho = e.rho * base;
        e.xi += f.power * rep.xi[f.gen];
    }
    return e;
}

int GroupToken::xi(const Representation& rep) const
{
    int total = 0;
    for (const auto& f : factors_)
        total += f.gen < 0 ? f.xi : f.power * rep.xi.at(static_cast<std::size_t>(f.gen));
    return total;
}

std::string GroupToken::str(const Representation& rep) const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty())
            s += ' ';
        if (f.gen < 0) {
            s += "[literal xi=" + std::to_string(f.xi) + "]";
            continue;
        }
        s += rep.generators.at(static_cast<std::size_t>(f.gen));
        if (f.power != 1)
            s += "^" + std::to_string(f.power);
    }
    return s;
}

Mat evalStarAt(const GroupToken& g, const Representation& rep, const Scalar& lambda)
{
    if (lambda.isZero())
        throw std::invalid_argument("lambda must be nonzero");
    Evaluated e = g.evaluate(rep);
    Mat m = e.rho.transpose();
    if (e.xi != 0)
        m *= lambda.pow(e.xi);
    return m;
}

LaurentMat evalStarLaurent(const GroupToken& g, const Representation& rep)
{
    Evaluated e = g.evaluate(rep);
    LaurentMat m(rep.n, rep.n);
    for (int r = 0; r < rep.n; ++r)
        for (int c = 0; c < rep.n; ++c)
            m(r, c) = LaurentPoly(Poly(e.rho(c, r)), e.xi);
    return m;
}

LaurentMat toLaurent(const Mat& m)
{
    LaurentMat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out(r, c) = LaurentPoly(m(r, c));
    return out;
}

Mat specialize(const LaurentMat& m, const Scalar& lambda)
{
    Mat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c).eval(lambda);
    return out;
}

}  // namespace jml
