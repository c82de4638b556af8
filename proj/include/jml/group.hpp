#pragma once

#include "jml/linalg.hpp"
#include "jml/snf.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jml {

/// Finite-dimensional representation of a presented group with a grading xi.
struct Representation
{
    int n = 1;
    std::vector<std::string> generators;
    std::vector<Mat> images;
    std::vector<int> xi;
    std::vector<std::string> relators;

    int index(std::string_view name) const;  // -1 when absent
    Mat inverseImage(int g) const;
    /// Checks shapes, invertibility and relators; throws std::invalid_argument.
    void validate() const;
    /// Trivial representation on the given generators, all xi = 0 unless listed.
    static Representation trivial(int n, std::vector<std::string> gens, std::vector<int> xi = {});
};

/// rho(g) and xi(g): the only data any pipeline consumes.
struct Evaluated
{
    Mat rho;
    int xi = 0;
};

/**
 * A group element as a product of factors, each either a generator power
 * or a literal (matrix, xi) pair. The empty product is the identity.
 */
class GroupToken
{
public:
    struct Factor
    {
        int gen = -1;   // generator index, or -1 for a literal
        int power = 1;  // for generators
        Mat matrix;     // for literals
        int xi = 0;
    };

    GroupToken() = default;
    static GroupToken generator(int g, int power = 1);
    static GroupToken literal(Mat m, int xi);
    /// Words such as "a b a^-1" or "a*b^2"; "" and "1" are the identity.
    static GroupToken parse(std::string_view word, const Representation& rep);

    bool isIdentityWord() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    GroupToken operator*(const GroupToken& o) const;
    GroupToken inverse() const;

    Evaluated evaluate(const Representation& rep) const;
    int xi(const Representation& rep) const;
    std::string str(const Representation& rep) const;

private:
    std::vector<Factor> factors_;
};

/// lambda^xi(g) * rho(g)^T
Mat evalStarAt(const GroupToken& g, const Representation& rep, const Scalar& lambda);
/// t^xi(g) * rho(g)^T over L
LaurentMat evalStarLaurent(const GroupToken& g, const Representation& rep);

LaurentMat toLaurent(const Mat& m);
/// Substitutes t := lambda.
Mat specialize(const LaurentMat& m, const Scalar& lambda);

}  // namespace jml
