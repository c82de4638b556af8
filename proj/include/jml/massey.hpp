#pragma once

#include "jml/delta.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jml {

/// Twisted cochains with rho_lambda coefficients; delta[k] : C^k -> C^{k+1}.
struct CochainComplex
{
    std::vector<int> dims;
    std::vector<Mat> delta;

    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int k) const { return k >= 0 && k <= top() ? dims[k] : 0; }
    Mat coboundary(int k) const;  // empty shapes outside the range
};

/// (dy)(s) = rho_lambda(g01) y(d0 s) + sum_{j>=1} (-1)^j y(dj s)
CochainComplex cochainsAt(const DeltaComplex& dc, const Representation& rep, const Scalar& lambda);

/**
 * Literal: chains satisfy d w_i = theta w_{i-1}.
 * Exponential: the flat deformation rho (x) exp(z theta) expanded in z, so
 * d w_i = sum_j a_j w_{i-j} with a_j = (-1)^{j+1} theta^j / j! pointwise.
 * The second form stays valid when theta is replaced by a cohomologous cocycle.
 */
enum class Deformation
{
    Literal,
    Exponential
};

struct MasseyOptions
{
    Deformation mode = Deformation::Literal;
    std::vector<long> epsilon;  // per vertex; theta' = theta + d epsilon
};

/// A chain (w_1, ..., w_r) of k-cochains.
struct RChain
{
    int degree = 0;
    std::vector<Vec> omega;
};

class MasseyEngine
{
public:
    MasseyEngine(const DeltaComplex& dc, const Representation& rep, const Scalar& lambda, MasseyOptions opts = {});

    const CochainComplex& complex() const { return cx_; }
    int top() const { return cx_.top(); }
    int cohomologyDim(int k) const;

    /// Matrix of y -> a_j y from C^k to C^{k+1}.
    Mat cup(int k, int j = 1) const;
    /// Value of theta' on the front edge of a simplex.
    long thetaFront(int k, int s) const;

    int mzDim(int m, int r);
    int mbDim(int m, int r);
    int mhDim(int m, int r);
    /// Delta_r : MH^m_(r) -> MH^{m+1}_(r) in fixed bases.
    Mat deltaR(int m, int r);
    /// True when MB^m_(i) lies in MZ^m_(j).
    bool mbInsideMz(int m, int i, int j);

    /// M_k: the largest r up to dim H^k + 1 with Delta_r nonzero in degree k; 0 if none.
    int length(int k);
    /// A chain of length M_k whose product is nonzero (empty when M_k = 0).
    RChain witness(int k);
    /// Checks d w_1 = 0 and d w_i = sum_j a_j w_{i-j} exactly.
    bool verifyChain(const RChain& c) const;

    struct StageCheck
    {
        bool squareZero = true;
        bool homologyMatches = true;
        std::vector<std::string> failures;
    };
    /// Delta_r^2 = 0 and dim H(MH_(r), Delta_r) = dim MH_(r+1) in every degree.
    StageCheck stageCheck(int r);

private:
    struct Stage
    {
        std::vector<Mat> omega;  // omega[i] : columns are w_{i+1} over a basis of chains
    };

    const Subquotient& H(int m) const { return h_[m]; }
    Mat hClass(int m, const Mat& cocycles) const;
    const Stage& stage(int m, int r);
    const Mat& obstruction(int m, int r);
    Mat mz(int m, int r);
    Mat mb(int m, int r);
    const Subquotient& mh(int m, int r);
    Scalar coefficient(int j, long theta) const;
    Mat cocycleOf(int m, const Stage& st, int r) const;

    const DeltaComplex& dc_;
    Representation rep_;
    Scalar lambda_;
    MasseyOptions opts_;
    CochainComplex cx_;
    std::vector<Subquotient> h_;
    std::map<std::pair<int, int>, Stage> stages_;
    std::map<std::pair<int, int>, Mat> obstructions_;
    std::map<std::pair<int, int>, Subquotient> mh_;
    std::map<std::pair<int, int>, Mat> cups_;
};

}  // namespace jml
