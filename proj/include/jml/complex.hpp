#pragma once

#include "jml/group.hpp"

#include <string>
#include <vector>

namespace jml {

/// One boundary (or chain-map) incidence: coefficient times a translate.
struct Incidence
{
    int cell = 0;  // index of the face (or target cell)
    long coeff = 1;
    GroupToken token;
};

/// Cells per degree with boundaries of preferred lifts in the universal cover.
struct CellData
{
    std::vector<int> cells;                                     // cells[k] = number of k-cells
    std::vector<std::vector<std::vector<Incidence>>> boundary;  // boundary[k][cell], k >= 1; boundary[0] empty

    int top() const { return static_cast<int>(cells.size()) - 1; }
    int count(int k) const { return k >= 0 && k <= top() ? cells[k] : 0; }
};

/**
 * Finite chain complex of free modules. d[k] : C_k -> C_{k-1} has shape
 * dim(k-1) x dim(k); d[0] has zero rows.
 */
template <typename T>
struct ChainComplex
{
    std::vector<int> dims;
    std::vector<Matrix<T>> d;

    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int k) const { return k >= 0 && k <= top() ? dims[k] : 0; }
    /// The boundary out of degree k, with empty shapes outside the range.
    Matrix<T> boundary(int k) const
    {
        if (k >= 0 && k <= top())
            return d[k];
        return Matrix<T>(dim(k - 1), dim(k));
    }
};

using KComplex = ChainComplex<Scalar>;
using LComplex = ChainComplex<LaurentPoly>;

/// Throws std::invalid_argument naming the degree where d d != 0 or shapes clash.
template <typename T>
void checkComplex(const ChainComplex<T>& cx)
{
    for (int k = 0; k <= cx.top(); ++k) {
        const auto& m = cx.d[k];
        if (m.rows() != cx.dim(k - 1) || m.cols() != cx.dim(k))
            throw std::invalid_argument("boundary in degree " + std::to_string(k) + " has shape " + m.shape());
        if (k >= 1 && !(cx.d[k - 1] * m).isZero())
            throw std::invalid_argument("boundary squares to a nonzero map in degree " + std::to_string(k));
    }
}

/// Validates incidence indices against cell counts.
void checkCellData(const CellData& cells);

KComplex buildComplexAt(const CellData& cells, const Representation& rep, const Scalar& lambda);
LComplex buildComplexLaurent(const CellData& cells, const Representation& rep);

/// Homology over K with deterministic bases (cycles modulo boundaries).
struct HomologyK
{
    std::vector<Subquotient> degrees;
    int dim(int k) const { return k >= 0 && k < static_cast<int>(degrees.size()) ? degrees[k].dim() : 0; }
};

HomologyK homologyOverK(const KComplex& cx);

struct HomologyLDegree
{
    int freeRank = 0;
    std::vector<Poly> torsion;  // monic, t-free, non-unit, divisibility chain
};

struct HomologyL
{
    std::vector<HomologyLDegree> degrees;
};

HomologyL homologyOverL(const LComplex& cx);

}  // namespace jml
