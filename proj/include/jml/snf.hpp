#pragma once

#include "jml/matrix.hpp"
#include "jml/poly.hpp"

#include <vector>

namespace jml {

using PolyMat = Matrix<Poly>;
using LaurentMat = Matrix<LaurentPoly>;

/// U * A * V = D with D diagonal, monic, d1 | d2 | ...
struct SnfResult
{
    PolyMat U, D, V;
    int rank = 0;
    /// Nonzero diagonal entries in order.
    std::vector<Poly> factors() const;
};

/// Pivot: nonzero entry of least degree, ties to the smallest (row, column).
SnfResult snfOverPoly(const PolyMat& a);

/// Invariant factors of a Laurent matrix over L, t-powers stripped.
struct LaurentSnf
{
    int rank = 0;
    std::vector<Poly> factors;     // all nonzero invariant factors (units become 1)
    std::vector<int> columnShift;  // column c was multiplied by t^columnShift[c]
    /// Factors of positive degree.
    std::vector<Poly> nonUnits() const;
};

LaurentSnf snfOverLaurent(const LaurentMat& a);

/// Squarefree class polynomial q with the multiplicity of q in every factor.
struct RootClass
{
    Poly q;
    std::vector<int> multiplicities;
};

/// Throws std::invalid_argument unless factors[i] divides factors[i+1].
std::vector<RootClass> rootClasses(const std::vector<Poly>& factors);

/// Multiplicities of (t - lambda) in each factor, zeros dropped, ascending.
std::vector<int> multiplicityAt(const std::vector<Poly>& factors, const Scalar& lambda);

/// Multiplicity of the factor q in p (q nonconstant, p nonzero).
int multiplicityOf(const Poly& p, const Poly& q);

/// Yun decomposition: p = c * prod a_j^j with a_j squarefree and pairwise coprime.
std::vector<Poly> squarefreeDecomposition(const Poly& p);

/// Matrix t*I - a over K[t].
PolyMat characteristicMatrix(const Matrix<Scalar>& a);

}  // namespace jml
