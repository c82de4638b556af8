#pragma once

#include "jml/monodromy.hpp"

#include <string>
#include <vector>

namespace jml {

/// Twisted L-complex of the mapping torus.
struct TorusComplex
{
    LComplex complex;
    std::string provenance;  // "cone" or "direct"
};

/**
 * Mapping cone of 1 - A on C_*(M) (x) L, where A is the Laurent evaluation
 * of the lift tokens u^-1 w. Degree k is C_k(M) + C_{k-1}(M) with
 * d = [[d_M, 1 - A], [0, -d_M]].
 */
TorusComplex buildCone(const MonodromyData& data, const Representation& rep);
/// A CW structure on X given directly.
TorusComplex buildDirect(const CellData& x, const Representation& rep);

struct TorsionDegree
{
    int freeRank = 0;
    std::vector<Poly> divisors;  // elementary divisors of the torsion part
};

struct TorsionReport
{
    std::vector<TorsionDegree> degrees;
    std::vector<std::string> warnings;
};

TorsionReport torsionReport(const TorusComplex& tc);
/// Nil(T_k, t - lambda): the largest multiplicity among the divisors.
int nilAt(const TorsionDegree& d, const LambdaQuery& q);

/// H^k(X) = Hom part (free rank of H_k) + Ext part (torsion of H_{k-1}).
struct CohomologyDegree
{
    int homRank = 0;
    std::vector<Poly> ext;
};

std::vector<CohomologyDegree> cohomologyViaUCT(const TorsionReport& t);

struct FactorDiff
{
    int degree = 0;  // degree k of H_k(M); compared with H^{k+1}(X)
    std::vector<Poly> monodromySide;
    std::vector<Poly> torusSide;
};

struct FactorCheck
{
    bool match = true;
    std::vector<FactorDiff> diffs;
};

/// Invariant factors of tI - phi_k against the Ext part of H^{k+1}(X).
FactorCheck factorCheck(const JordanSpectrum& js, const std::vector<CohomologyDegree>& cohomology);

/// Specialization of a torus complex at t = lambda.
KComplex specializeComplex(const LComplex& cx, const Scalar& lambda);

/**
 * Checks dim H_k(X, lambda) = c_k + c_{k-1}, c_j = dim ker(phi_j / lambda - 1).
 * Returns one flag per degree of X.
 */
std::vector<bool> coneExactness(const MonodromyMap& phi, const TorusComplex& tc, const Scalar& lambda);

}  // namespace jml
