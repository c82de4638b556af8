#include "jml/monodromy.hpp"

#include <algorithm>
#include <stdexcept>

namespace jml {

void MonodromyData::check(const Representation& rep) const
{
    checkCellData(M);
    if (static_cast<int>(phi.size()) != M.top() + 1)
        throw std::invalid_argument("lift must be given in every degree of M");
    for (int k = 0; k <= M.top(); ++k) {
        if (static_cast<int>(phi[k].size()) != M.cells[k])
            throw std::invalid_argument("lift in degree " + std::to_string(k) + " must list every cell");
        for (int c = 0; c < M.cells[k]; ++c)
            for (const auto& inc : phi[k][c]) {
                if (inc.cell < 0 || inc.cell >= M.cells[k])
                    throw std::invalid_argument("lift of cell " + std::to_string(c) + " in degree " + std::to_string(k) +
                                                " references missing cell " + std::to_string(inc.cell));
                if (inc.token.xi(rep) != 0)
                    throw std::invalid_argument("lift token '" + inc.token.str(rep) + "' must have xi = 0");
            }
    }
    for (int k = 1; k <= M.top(); ++k)
        for (const auto& cell : M.boundary[k])
            for (const auto& inc : cell)
                if (inc.token.xi(rep) != 0)
                    throw std::invalid_argument("boundary token '" + inc.token.str(rep) + "' of M must have xi = 0");
    if (u.xi(rep) != 1)
        throw std::invalid_argument("u must have xi = 1");
}

MonodromyData shiftLift(const MonodromyData& data, const GroupToken& h)
{
    MonodromyData out = data;
    out.u = h * data.u;
    for (auto& degree : out.phi)
        for (auto& cell : degree)
            for (auto& inc : cell)
                inc.token = h * inc.token;
    return out;
}

namespace {

template <typename T, typename Eval>
std::vector<Matrix<T>> assemble(const MonodromyData& data, int n, Eval eval)
{
    std::vector<Matrix<T>> out;
    for (int k = 0; k <= data.M.top(); ++k) {
        int c = data.M.cells[k];
        Matrix<T> a(n * c, n * c);
        for (int src = 0; src < c; ++src)
            for (const auto& inc : data.phi[k][src]) {
                Matrix<T> block = eval(inc.token);
                block *= T(inc.coeff);
                a.addBlock(n * inc.cell, n * src, block);
            }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

std::vector<Mat> buildChainMapA(const MonodromyData& data, const Representation& rep, const Scalar& lambda)
{
    data.check(rep);
    GroupToken uinv = data.u.inverse();
    auto a = assemble<Scalar>(data, rep.n, [&](const GroupToken& w) { return evalStarAt(uinv * w, rep, lambda); });
    checkChainMap(buildComplexAt(data.M, rep, lambda), a);
    return a;
}

std::vector<LaurentMat> buildChainMapLaurent(const MonodromyData& data, const Representation& rep)
{
    data.check(rep);
    GroupToken uinv = data.u.inverse();
    auto a = assemble<LaurentPoly>(data, rep.n, [&](const GroupToken& w) { return evalStarLaurent(uinv * w, rep); });
    checkChainMap(buildComplexLaurent(data.M, rep), a);
    return a;
}

std::vector<Mat> buildChainMapCirc(const MonodromyData& data, const Representation& rep, const Scalar& lambda)
{
    data.check(rep);
    return assemble<Scalar>(data, rep.n, [&](const GroupToken& w) { return evalStarAt(w, rep, lambda); });
}

MonodromyMap inducedOnHomology(const std::vector<Mat>& a, const HomologyK& h)
{
    MonodromyMap m;
    for (std::size_t k = 0; k < h.degrees.size(); ++k) {
        const Subquotient& q = h.degrees[k];
        Mat induced = q.coords(a[k] * q.complement);
        if (induced.rows() > 0 && rank(induced) != induced.rows())
            m.warnings.push_back("induced map is not invertible in degree " + std::to_string(k));
        m.phi.push_back(std::move(induced));
    }
    return m;
}

MonodromyResult computeMonodromy(const MonodromyData& data, const Representation& rep)
{
    MonodromyResult r;
    r.complex = buildComplexAt(data.M, rep, Scalar(1));
    r.homology = homologyOverK(r.complex);
    r.chainMap = buildChainMapA(data, rep, Scalar(1));
    r.map = inducedOnHomology(r.chainMap, r.homology);
    return r;
}

JordanSpectrum jordanSpectrum(const MonodromyMap& m)
{
    JordanSpectrum js;
    for (const auto& a : m.phi) {
        JordanDegree d;
        d.dim = a.rows();
        auto snf = snfOverPoly(characteristicMatrix(a));
        for (const auto& f : snf.factors())
            if (f.degree() > 0)
                d.invariantFactors.push_back(f);
        d.classes = rootClasses(d.invariantFactors);
        js.degrees.push_back(std::move(d));
    }
    return js;
}

LambdaQuery LambdaQuery::of(const Scalar& v)
{
    LambdaQuery q;
    q.value = v;
    q.classPoly = Poly::linear(v);
    q.label = v.str();
    return q;
}

LambdaQuery LambdaQuery::parse(const std::string& text)
{
    if (text.find_first_of("tx") == std::string::npos)
        return of(Scalar::parse(text));
    Poly p = Poly::parse(text).monic();
    if (p.degree() < 1)
        throw std::invalid_argument("class polynomial '" + text + "' must be nonconstant");
    if (p.degree() == 1)
        return of(-p.coeff(0));
    if (gcd(p, p.derivative()).degree() > 0)
        throw std::invalid_argument("class polynomial '" + text + "' must be squarefree");
    LambdaQuery q;
    q.classPoly = p;
    q.label = p.str();
    return q;
}

std::vector<int> blockSizes(const std::vector<Poly>& factors, const LambdaQuery& q)
{
    if (q.isValue())
        return multiplicityAt(factors, *q.value);
    std::vector<int> out;
    if (factors.empty())
        return out;
    Poly g = gcd(q.classPoly, factors.back());
    if (g.degree() <= 0)
        return out;
    if (g.degree() < q.classPoly.degree())
        throw std::invalid_argument("only part of the class " + q.label + " are eigenvalues; query a finer class");
    for (const auto& f : factors) {
        int k = multiplicityOf(f, g);
        Poly rest = f;
        for (int j = 0; j < k; ++j)
            rest = rest / g;
        if (gcd(rest, g).degree() > 0)
            throw std::invalid_argument("roots of " + q.label + " carry different block structures; query a finer class");
        if (k > 0)
            out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int maxBlock(const std::vector<int>& sizes) { return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end()); }

std::vector<int> blockSizesByRank(const Mat& a, const Scalar& lambda)
{
    int n = a.rows();
    Mat shifted = a - Mat::identity(n) * lambda;
    std::vector<int> kernelDims{0};
    Mat p = Mat::identity(n);
    for (int j = 1; j <= n; ++j) {
        p = p * shifted;
        kernelDims.push_back(n - rank(p));
        if (kernelDims[j] == kernelDims[j - 1])
            break;
    }
    kernelDims.push_back(kernelDims.back());
    std::vector<int> out;
    for (std::size_t j = 1; j + 1 < kernelDims.size(); ++j) {
        int atLeast = kernelDims[j] - kernelDims[j - 1];
        int atLeastNext = kernelDims[j + 1] - kernelDims[j];
        for (int c = 0; c < atLeast - atLeastNext; ++c)
            out.push_back(static_cast<int>(j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SplitResult phiCircSplit(const MonodromyData& data, const Representation& rep, const Scalar& lambda)
{
    data.check(rep);
    Mat ru = data.u.evaluate(rep).rho;
    auto commutes = [&](const GroupToken& g) {
        Mat rg = g.evaluate(rep).rho;
        if (!(ru * rg == rg * ru))
            throw std::invalid_argument("rho(u) does not commute with '" + g.str(rep) + "'; the split assertion is inconsistent");
    };
    for (std::size_t g = 0; g < rep.generators.size(); ++g)
        if (rep.xi[g] == 0)
            commutes(GroupToken::generator(static_cast<int>(g)));
    for (const auto& degree : data.M.boundary)
        for (const auto& cell : degree)
            for (const auto& inc : cell)
                commutes(inc.token);
    for (const auto& degree : data.phi)
        for (const auto& cell : degree)
            for (const auto& inc : cell)
                commutes(inc.token);

    KComplex cx = buildComplexAt(data.M, rep, lambda);
    HomologyK h = homologyOverK(cx);
    auto circ = buildChainMapCirc(data, rep, lambda);
    checkChainMap(cx, circ);
    auto a = buildChainMapA(data, rep, lambda);

    Mat bu = evalStarAt(data.u, rep, lambda);
    std::vector<Mat> bChain;
    for (int k = 0; k <= data.M.top(); ++k) {
        Mat b(cx.dim(k), cx.dim(k));
        for (int c = 0; c < data.M.cells[k]; ++c)
            b.setBlock(rep.n * c, rep.n * c, bu);
        bChain.push_back(std::move(b));
    }
    checkChainMap(cx, bChain);

    SplitResult out;
    out.phiCirc = inducedOnHomology(circ, h);
    MonodromyMap bMap = inducedOnHomology(bChain, h);
    MonodromyMap phi = inducedOnHomology(a, h);
    out.B = bMap.phi;
    out.consistent = true;
    for (std::size_t k = 0; k < h.degrees.size(); ++k) {
        auto binv = inverse(out.B[k]);
        if (!binv || !(*binv * out.phiCirc.phi[k] == phi.phi[k]))
            out.consistent = false;
    }
    return out;
}

}  // namespace jml
