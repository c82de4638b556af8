#include "jml/torus.hpp"

#include <stdexcept>

namespace jml {

TorusComplex buildCone(const MonodromyData& data, const Representation& rep)
{
    LComplex m = buildComplexLaurent(data.M, rep);
    auto a = buildChainMapLaurent(data, rep);
    const int top = m.top() + 1;
    LComplex x;
    for (int k = 0; k <= top; ++k)
        x.dims.push_back(m.dim(k) + m.dim(k - 1));
    x.d.emplace_back(0, x.dims[0]);
    for (int k = 1; k <= top; ++k) {
        LaurentMat d(x.dims[k - 1], x.dims[k]);
        // rows: C_{k-1}(M) then C_{k-2}(M); columns: C_k(M) then C_{k-1}(M)
        d.setBlock(0, 0, m.boundary(k));
        LaurentMat f = LaurentMat::identity(m.dim(k - 1)) - a[k - 1];
        d.setBlock(0, m.dim(k), f);
        d.setBlock(m.dim(k - 1), m.dim(k), -m.boundary(k - 1));
        x.d.push_back(std::move(d));
    }
    checkComplex(x);
    return {std::move(x), "cone"};
}

TorusComplex buildDirect(const CellData& x, const Representation& rep)
{
    return {buildComplexLaurent(x, rep), "direct"};
}

TorsionReport torsionReport(const TorusComplex& tc)
{
    TorsionReport r;
    HomologyL h = homologyOverL(tc.complex);
    for (std::size_t k = 0; k < h.degrees.size(); ++k) {
        r.degrees.push_back({h.degrees[k].freeRank, h.degrees[k].torsion});
        if (h.degrees[k].freeRank > 0)
            r.warnings.push_back("H_" + std::to_string(k) + " has free rank " + std::to_string(h.degrees[k].freeRank) +
                                 "; a mapping torus of a finite complex has torsion homology");
    }
    return r;
}

int nilAt(const TorsionDegree& d, const LambdaQuery& q) { return maxBlock(blockSizes(d.divisors, q)); }

std::vector<CohomologyDegree> cohomologyViaUCT(const TorsionReport& t)
{
    std::vector<CohomologyDegree> out;
    for (std::size_t k = 0; k <= t.degrees.size(); ++k) {
        CohomologyDegree c;
        if (k < t.degrees.size())
            c.homRank = t.degrees[k].freeRank;
        if (k > 0)
            c.ext = t.degrees[k - 1].divisors;
        out.push_back(std::move(c));
    }
    return out;
}

FactorCheck factorCheck(const JordanSpectrum& js, const std::vector<CohomologyDegree>& cohomology)
{
    FactorCheck r;
    std::size_t top = std::max(js.degrees.size(), cohomology.empty() ? 0 : cohomology.size() - 1);
    for (std::size_t k = 0; k < top; ++k) {
        std::vector<Poly> left = k < js.degrees.size() ? js.degrees[k].invariantFactors : std::vector<Poly>{};
        std::vector<Poly> right = k + 1 < cohomology.size() ? cohomology[k + 1].ext : std::vector<Poly>{};
        if (!(left == right)) {
            r.match = false;
            r.diffs.push_back({static_cast<int>(k), left, right});
        }
    }
    return r;
}

KComplex specializeComplex(const LComplex& cx, const Scalar& lambda)
{
    KComplex out;
    out.dims = cx.dims;
    for (const auto& d : cx.d)
        out.d.push_back(specialize(d, lambda));
    return out;
}

std::vector<bool> coneExactness(const MonodromyMap& phi, const TorusComplex& tc, const Scalar& lambda)
{
    KComplex x = specializeComplex(tc.complex, lambda);
    HomologyK h = homologyOverK(x);
    auto c = [&](int j) {
        if (j < 0 || j >= static_cast<int>(phi.phi.size()))
            return 0;
        const Mat& a = phi.phi[j];
        Mat shifted = a * lambda.inverse() - Mat::identity(a.rows());
        return a.rows() - rank(shifted);
    };
    std::vector<bool> out;
    for (int k = 0; k <= x.top(); ++k)
        out.push_back(h.dim(k) == c(k) + c(k - 1));
    return out;
}

}  // namespace jml
