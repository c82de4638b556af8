#pragma once

#include "jml/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jml {

/**
 * The fiber M with a lift of the monodromy. phi[k][sigma] lists the image
 * of the preferred lift of sigma as (target cell, coefficient, translate).
 * Every token lies in H (xi = 0); u has xi = 1.
 */
struct MonodromyData
{
    CellData M;
    std::vector<std::vector<std::vector<Incidence>>> phi;
    GroupToken u;

    /// Throws std::invalid_argument on shape or grading violations.
    void check(const Representation& rep) const;
};

/// Replaces u by h*u and every lift token w by h*w.
MonodromyData shiftLift(const MonodromyData& data, const GroupToken& h);

/// Throws std::invalid_argument when a_{k-1} d_k != d_k a_k for some k.
template <typename T>
void checkChainMap(const ChainComplex<T>& cx, const std::vector<Matrix<T>>& a)
{
    for (int k = 1; k <= cx.top(); ++k)
        if (!(a[k - 1] * cx.d[k] == cx.d[k] * a[k]))
            throw std::invalid_argument("lift does not commute with the boundary in degree " + std::to_string(k));
}

/// Blocks c * evalStarAt(u^-1 w); verified against the boundary at lambda.
std::vector<Mat> buildChainMapA(const MonodromyData& data, const Representation& rep, const Scalar& lambda);
/// The same tokens evaluated over L.
std::vector<LaurentMat> buildChainMapLaurent(const MonodromyData& data, const Representation& rep);
/// Blocks c * evalStarAt(w), without the u factor.
std::vector<Mat> buildChainMapCirc(const MonodromyData& data, const Representation& rep, const Scalar& lambda);

struct MonodromyMap
{
    std::vector<Mat> phi;  // per degree, in the homology basis
    std::vector<std::string> warnings;
};

MonodromyMap inducedOnHomology(const std::vector<Mat>& a, const HomologyK& h);

/// Twisted monodromy phi_* on H_*(M) at lambda = 1.
struct MonodromyResult
{
    KComplex complex;
    HomologyK homology;
    std::vector<Mat> chainMap;
    MonodromyMap map;
};

MonodromyResult computeMonodromy(const MonodromyData& data, const Representation& rep);

struct JordanDegree
{
    int dim = 0;
    std::vector<Poly> invariantFactors;  // nonconstant invariant factors of tI - phi_k
    std::vector<RootClass> classes;
};

struct JordanSpectrum
{
    std::vector<JordanDegree> degrees;
};

JordanSpectrum jordanSpectrum(const MonodromyMap& m);

/// Eigenvalue query: an exact scalar, or a root class given by a squarefree polynomial.
struct LambdaQuery
{
    std::optional<Scalar> value;
    Poly classPoly;  // t - value for plain scalars
    std::string label;

    static LambdaQuery parse(const std::string& text);
    static LambdaQuery of(const Scalar& v);
    bool isValue() const { return value.has_value(); }
};

/// Block sizes at a query, ascending; empty when not an eigenvalue.
std::vector<int> blockSizes(const std::vector<Poly>& invariantFactors, const LambdaQuery& q);
int maxBlock(const std::vector<int>& sizes);

/// Oracle: block sizes from dim ker (a - lambda)^j.
std::vector<int> blockSizesByRank(const Mat& a, const Scalar& lambda);

/// Split case: phi_circ, B on homology, and the check phi_* = B^-1 phi_circ.
struct SplitResult
{
    MonodromyMap phiCirc;
    std::vector<Mat> B;
    bool consistent = false;
};

/// Throws std::invalid_argument when rho(u) fails to commute with a token of H.
SplitResult phiCircSplit(const MonodromyData& data, const Representation& rep, const Scalar& lambda = Scalar(1));

}  // namespace jml
