#pragma once

#include "jml/matrix.hpp"
#include "jml/scalar.hpp"

#include <optional>
#include <vector>

namespace jml {

using Mat = Matrix<Scalar>;
using Vec = std::vector<Scalar>;

/// Reduced row echelon form; when requested, transform * input = reduced.
struct Rref
{
    Mat reduced;
    std::vector<int> pivots;  // pivot column of each nonzero row
    Mat transform;
};

Rref rref(const Mat& a, bool withTransform = false);

struct RankKernel
{
    int rank = 0;
    /// One vector per free column, with a 1 in that column and zeros in
    /// the other free columns.
    std::vector<Vec> kernel;
};

/// Throws std::invalid_argument when entries come from different extension fields.
void checkSingleContext(const Mat& a);

RankKernel rankAndKernel(const Mat& a);
int rank(const Mat& a);
Mat kernelMatrix(const Mat& a);

/// Some x with a*x = b, or nothing when the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);
/// Solves a*X = B column by column.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);

/// Columns of a at its pivot positions.
Mat columnBasis(const Mat& a);

/// L with L*a = I for a matrix of full column rank.
Mat leftInverse(const Mat& a);

Mat power(const Mat& a, int e);
Vec scaled(const Vec& v, const Scalar& s);
bool isZero(const Vec& v);

/**
 * Subquotient Z/B of a vector space with explicit coordinates.
 * Columns of `complement` are a fixed lift of a basis of Z/B; `coords`
 * maps a vector of Z to its coordinates in that basis.
 */
struct Subquotient
{
    int ambient = 0;
    Mat boundaries;  // basis of B as columns
    Mat complement;  // lifts of a basis of Z/B
    Mat coordMap;    // rows: coordinates of B then Z/B, as a left inverse of [B | complement]

    int dim() const { return complement.cols(); }
    /// Coordinates in Z/B of a vector known to lie in Z.
    Vec coords(const Vec& z) const;
    /// Matrix of coordinates of several columns.
    Mat coords(const Mat& zs) const;
};

/// Builds Z/B where Z is spanned by the columns of `cycles` and B by those of `bounds` (B inside Z).
Subquotient subquotient(const Mat& cycles, const Mat& bounds);

}  // namespace jml
