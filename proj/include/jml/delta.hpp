#pragma once

#include "jml/complex.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jml {

/**
 * Semi-simplicial model of X with normalized faces. faces[j] is the index of
 * d_j in the previous dimension, or -1 when that face is degenerate.
 * `front` is the translate along the edge from vertex 0 to vertex 1 of the
 * preferred lift, and theta its value of the distinguished 1-cocycle.
 */
struct DeltaSimplex
{
    std::vector<int> faces;
    std::vector<int> vertices;  // indices of 0-simplices
    GroupToken front;
    int theta = 0;
};

struct DeltaComplex
{
    std::vector<std::vector<DeltaSimplex>> simplices;

    int top() const { return static_cast<int>(simplices.size()) - 1; }
    int count(int k) const { return k >= 0 && k <= top() ? static_cast<int>(simplices[k].size()) : 0; }
    std::vector<int> counts() const;
};

/// Face identities, d theta = 0, flatness of translates and xi = theta on edges.
void checkDelta(const DeltaComplex& dc, const Representation& rep);

/**
 * Lattice torus B = Z^d / N Z^d with domain A = Z^d / mN Z^d, both
 * triangulated by monotone lattice paths. The gluing maps are
 * g(p) = ceil(p / m) (homotopic to the identity) and
 * f(p) = ceil(S p / m) + shift (homotopic to the monodromy after g).
 */
struct LatticeSpec
{
    int d = 0;
    int N = 1;
    int m = 1;
    std::vector<std::vector<int>> S;
    std::vector<int> shift;
    std::vector<std::string> generators;  // translation along each axis
    std::string u = "u";
};

DeltaComplex latticeTorus(const LatticeSpec& spec, const Representation& rep);

/**
 * Ordered simplicial complex on vertices 0..n-1 with a vertex map phi.
 * edgeTokens[(v, w)] for v < w is the translate along the edge; vert[v] runs
 * from phi(v) up to v. Without subdivision phi must be non-decreasing on
 * every simplex; with it the domain is the barycentric subdivision.
 */
struct SimplicialSpec
{
    int vertices = 0;
    std::vector<std::vector<int>> simplices;  // closed under faces on input
    std::map<std::pair<int, int>, std::string> edgeTokens;
    std::vector<int> phi;
    std::vector<std::string> vert;
    bool subdivide = false;
};

DeltaComplex simplicialTorus(const SimplicialSpec& spec, const Representation& rep);

/// The model as CW data for the chain complex with antirepresentation coefficients.
CellData toCellData(const DeltaComplex& dc);

}  // namespace jml
