#include "jml/complex.hpp"

#include <stdexcept>

namespace jml {

void checkCellData(const CellData& cells)
{
    if (cells.cells.empty())
        throw std::invalid_argument("complex has no cells");
    if (static_cast<int>(cells.boundary.size()) != cells.top() + 1)
        throw std::invalid_argument("boundary data must list every degree up to the top");
    for (int k = 1; k <= cells.top(); ++k) {
        if (static_cast<int>(cells.boundary[k].size()) != cells.cells[k])
            throw std::invalid_argument("degree " + std::to_string(k) + " lists " +
                                        std::to_string(cells.boundary[k].size()) + " boundaries for " +
                                        std::to_string(cells.cells[k]) + " cells");
        for (int c = 0; c < cells.cells[k]; ++c)
            for (const auto& inc : cells.boundary[k][c])
                if (inc.cell < 0 || inc.cell >= cells.cells[k - 1])
                    throw std::invalid_argument("cell " + std::to_string(c) + " of degree " + std::to_string(k) +
                                                " references missing face " + std::to_string(inc.cell));
    }
}

namespace {

template <typename T, typename Eval>
ChainComplex<T> build(const CellData& cells, int n, Eval eval)
{
    checkCellData(cells);
    ChainComplex<T> cx;
    for (int c : cells.cells)
        cx.dims.push_back(n * c);
    cx.d.emplace_back(0, cx.dims[0]);
    for (int k = 1; k <= cells.top(); ++k) {
        Matrix<T> m(cx.dims[k - 1], cx.dims[k]);
        for (int c = 0; c < cells.cells[k]; ++c)
            for (const auto& inc : cells.boundary[k][c]) {
                Matrix<T> block = eval(inc.token);
                block *= T(inc.coeff);
                m.addBlock(n * inc.cell, n * c, block);
            }
        cx.d.push_back(std::move(m));
    }
    checkComplex(cx);
    return cx;
}

}  // namespace

KComplex buildComplexAt(const CellData& cells, const Representation& rep, const Scalar& lambda)
{
    return build<Scalar>(cells, rep.n, [&](const GroupToken& g) { return evalStarAt(g, rep, lambda); });
}

LComplex buildComplexLaurent(const CellData& cells, const Representation& rep)
{
    return build<LaurentPoly>(cells, rep.n, [&](const GroupToken& g) { return evalStarLaurent(g, rep); });
}

HomologyK homologyOverK(const KComplex& cx)
{
    HomologyK h;
    for (int k = 0; k <= cx.top(); ++k) {
        Mat z = kernelMatrix(cx.boundary(k));
        Mat b = cx.boundary(k + 1);
        h.degrees.push_back(subquotient(z, b));
    }
    return h;
}

HomologyL homologyOverL(const LComplex& cx)
{
    std::vector<LaurentSnf> snfs;
    for (int k = 0; k <= cx.top() + 1; ++k)
        snfs.push_back(snfOverLaurent(cx.boundary(k)));
    HomologyL h;
    for (int k = 0; k <= cx.top(); ++k) {
        HomologyLDegree deg;
        deg.freeRank = cx.dim(k) - snfs[k].rank - snfs[k + 1].rank;
        deg.torsion = snfs[k + 1].nonUnits();
        h.degrees.push_back(std::move(deg));
    }
    return h;
}

}  // namespace jml
