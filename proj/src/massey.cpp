#include "jml/massey.hpp"

#include <stdexcept>

namespace jml {

Mat CochainComplex::coboundary(int k) const
{
    if (k >= 0 && k < static_cast<int>(delta.size()))
        return delta[k];
    return Mat(dim(k + 1), dim(k));
}

namespace {

Mat transport(const DeltaSimplex& s, const Representation& rep, const Scalar& lambda)
{
    Evaluated e = s.front.evaluate(rep);
    return e.rho * lambda.pow(e.xi);
}

}  // namespace

CochainComplex cochainsAt(const DeltaComplex& dc, const Representation& rep, const Scalar& lambda)
{
    const int n = rep.n;
    CochainComplex cx;
    for (int k = 0; k <= dc.top(); ++k)
        cx.dims.push_back(n * dc.count(k));
    for (int k = 0; k <= dc.top(); ++k) {
        Mat d(cx.dim(k + 1), cx.dim(k));
        for (int s = 0; s < dc.count(k + 1); ++s) {
            const auto& sx = dc.simplices[k + 1][s];
            for (int j = 0; j <= k + 1; ++j) {
                int f = sx.faces[j];
                if (f < 0)
                    continue;
                if (j == 0)
                    d.addBlock(s * n, f * n, transport(sx, rep, lambda));
                else
                    d.addBlock(s * n, f * n, Mat::identity(n) * Scalar(j % 2 ? -1 : 1));
            }
        }
        cx.delta.push_back(std::move(d));
    }
    return cx;
}

MasseyEngine::MasseyEngine(const DeltaComplex& dc, const Representation& rep, const Scalar& lambda, MasseyOptions opts)
    : dc_(dc), rep_(rep), lambda_(lambda), opts_(std::move(opts)), cx_(cochainsAt(dc, rep, lambda))
{
    if (!opts_.epsilon.empty() && static_cast<int>(opts_.epsilon.size()) != dc.count(0))
        throw std::invalid_argument("epsilon needs one value per vertex");
    for (int k = 0; k <= top(); ++k) {
        Mat z = kernelMatrix(cx_.coboundary(k));
        h_.push_back(subquotient(z, cx_.coboundary(k - 1)));
    }
}

int MasseyEngine::cohomologyDim(int k) const { return k >= 0 && k <= top() ? h_[k].dim() : 0; }

long MasseyEngine::thetaFront(int k, int s) const
{
    const auto& sx = dc_.simplices[k][s];
    long t = sx.theta;
    if (!opts_.epsilon.empty() && k >= 1)
        t += opts_.epsilon[sx.vertices[1]] - opts_.epsilon[sx.vertices[0]];
    return t;
}

Scalar MasseyEngine::coefficient(int j, long theta) const
{
    if (opts_.mode == Deformation::Literal)
        return j == 1 ? Scalar(theta) : Scalar(0);
    mpq_class c = 1;
    for (int q = 1; q <= j; ++q) {
        c *= theta;
        c /= q;
    }
    if (j % 2 == 0)
        c = -c;
    return Scalar(c);
}

Mat MasseyEngine::cup(int k, int j) const
{
    const int n = rep_.n;
    Mat a(cx_.dim(k + 1), cx_.dim(k));
    if (k < 0 || k + 1 > top())
        return a;
    for (int s = 0; s < dc_.count(k + 1); ++s) {
        const auto& sx = dc_.simplices[k + 1][s];
        int back = sx.faces[0];
        if (back < 0)
            continue;
        Scalar c = coefficient(j, thetaFront(k + 1, s));
        if (c.isZero())
            continue;
        a.addBlock(s * n, back * n, transport(sx, rep_, lambda_) * c);
    }
    return a;
}

Mat MasseyEngine::hClass(int m, const Mat& cocycles) const { return h_[m].coords(cocycles); }

const MasseyEngine::Stage& MasseyEngine::stage(int m, int r)
{
    auto key = std::make_pair(m, r);
    if (auto it = stages_.find(key); it != stages_.end())
        return it->second;
    Stage st;
    const Mat& iota = H(m).complement;
    if (r == 1) {
        st.omega = {iota};
    } else {
        const Stage& prev = stage(m, r - 1);
        Mat kernel = kernelMatrix(obstruction(m, r - 1));
        Mat y(cx_.dim(m + 1), prev.omega[0].cols());
        for (int j = 1; j < r; ++j)
            y += cup(m, j) * prev.omega[r - 1 - j];
        auto x = solve(cx_.coboundary(m), y * kernel);
        if (!x)
            throw std::logic_error("a chain with vanishing obstruction does not extend");
        const int cols = kernel.cols() + iota.cols();
        for (int i = 0; i + 1 < r; ++i) {
            Mat w(cx_.dim(m), cols);
            w.setBlock(0, 0, prev.omega[i] * kernel);
            st.omega.push_back(std::move(w));
        }
        Mat last(cx_.dim(m), cols);
        last.setBlock(0, 0, *x);
        last.setBlock(0, kernel.cols(), iota);
        st.omega.push_back(std::move(last));
    }
    return stages_.emplace(key, std::move(st)).first->second;
}

const Mat& MasseyEngine::obstruction(int m, int r)
{
    auto key = std::make_pair(m, r);
    if (auto it = obstructions_.find(key); it != obstructions_.end())
        return it->second;
    const Stage& st = stage(m, r);
    const int cols = st.omega[0].cols();
    Mat o(cohomologyDim(m + 1), cols);
    if (m + 1 <= top()) {
        Mat y(cx_.dim(m + 1), cols);
        for (int j = 1; j <= r; ++j)
            y += cup(m, j) * st.omega[r - j];
        if (!(cx_.coboundary(m + 1) * y).isZero())
            throw std::logic_error("the product of a chain is not a cocycle");
        o = hClass(m + 1, y);
    }
    return obstructions_.emplace(key, std::move(o)).first->second;
}

Mat MasseyEngine::mz(int m, int r)
{
    Mat c = hClass(m, stage(m, r).omega[0]);
    return c.cols() ? columnBasis(c) : Mat(cohomologyDim(m), 0);
}

Mat MasseyEngine::mb(int m, int r)
{
    if (r == 1 || m == 0)
        return Mat(cohomologyDim(m), 0);
    const Mat& o = obstruction(m - 1, r - 1);
    return o.cols() ? columnBasis(o) : Mat(cohomologyDim(m), 0);
}

const Subquotient& MasseyEngine::mh(int m, int r)
{
    auto key = std::make_pair(m, r);
    if (auto it = mh_.find(key); it != mh_.end())
        return it->second;
    if (!mbInsideMz(m, r, r))
        throw std::logic_error("MB is not contained in MZ in degree " + std::to_string(m));
    return mh_.emplace(key, subquotient(mz(m, r), mb(m, r))).first->second;
}

int MasseyEngine::mzDim(int m, int r) { return mz(m, r).cols(); }
int MasseyEngine::mbDim(int m, int r) { return mb(m, r).cols(); }
int MasseyEngine::mhDim(int m, int r) { return mh(m, r).dim(); }

bool MasseyEngine::mbInsideMz(int m, int i, int j)
{
    Mat z = mz(m, j), b = mb(m, i);
    if (b.cols() == 0)
        return true;
    Mat both(z.rows(), z.cols() + b.cols());
    both.setBlock(0, 0, z);
    both.setBlock(0, z.cols(), b);
    return rank(both) == z.cols();
}

Mat MasseyEngine::deltaR(int m, int r)
{
    const Subquotient& src = mh(m, r);
    if (m + 1 > top())
        return Mat(0, src.dim());
    const Subquotient& dst = mh(m + 1, r);
    Mat classes = hClass(m, stage(m, r).omega[0]);
    const Mat& o = obstruction(m, r);
    Mat zTarget = mz(m + 1, r);
    Mat out(dst.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
        auto x = solve(classes, src.complement.column(c));
        if (!x)
            throw std::logic_error("a class of MZ has no chain");
        Vec image = o * *x;
        if (!solve(zTarget, image))
            throw std::logic_error("a Massey product leaves MZ");
        Vec coords = dst.coords(image);
        for (int r2 = 0; r2 < dst.dim(); ++r2)
            out(r2, c) = coords[r2];
    }
    return out;
}

int MasseyEngine::length(int k)
{
    int best = 0;
    for (int r = 1; r <= cohomologyDim(k) + 1; ++r)
        if (!deltaR(k, r).isZero())
            best = r;
    return best;
}

RChain MasseyEngine::witness(int k)
{
    RChain chain;
    chain.degree = k;
    int r = length(k);
    if (r == 0)
        return chain;
    Mat d = deltaR(k, r);
    const Subquotient& src = mh(k, r);
    Mat classes = hClass(k, stage(k, r).omega[0]);
    for (int c = 0; c < d.cols(); ++c) {
        if (isZero(d.column(c)))
            continue;
        Vec x = *solve(classes, src.complement.column(c));
        for (const Mat& w : stage(k, r).omega)
            chain.omega.push_back(w * x);
        break;
    }
    return chain;
}

bool MasseyEngine::verifyChain(const RChain& c) const
{
    const int k = c.degree;
    for (std::size_t i = 0; i < c.omega.size(); ++i) {
        Vec rhs(static_cast<std::size_t>(cx_.dim(k + 1)), Scalar(0));
        for (std::size_t j = 1; j <= i; ++j) {
            Vec term = cup(k, static_cast<int>(j)) * c.omega[i - j];
            for (std::size_t q = 0; q < rhs.size(); ++q)
                rhs[q] += term[q];
        }
        Vec lhs = cx_.coboundary(k) * c.omega[i];
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

MasseyEngine::StageCheck MasseyEngine::stageCheck(int r)
{
    StageCheck t;
    std::vector<Mat> d;
    for (int m = 0; m <= top(); ++m)
        d.push_back(deltaR(m, r));
    auto deg = [](int m) { return " in degree " + std::to_string(m); };
    for (int m = 0; m <= top(); ++m) {
        if (m + 1 <= top() && !(d[m + 1] * d[m]).isZero()) {
            t.squareZero = false;
            t.failures.push_back("Delta_" + std::to_string(r) + " squared is nonzero" + deg(m));
        }
        int ker = d[m].cols() - rank(d[m]);
        int im = m > 0 ? rank(d[m - 1]) : 0;
        if (ker - im != mhDim(m, r + 1)) {
            t.homologyMatches = false;
            t.failures.push_back("homology of Delta_" + std::to_string(r) + " differs from MH_(" +
                                 std::to_string(r + 1) + ")" + deg(m));
        }
        if (!mbInsideMz(m, r + 1, r) || !mbInsideMz(m, r, r + 1))
            t.failures.push_back("MB is not inside MZ" + deg(m));
        Mat z1 = mz(m, r), z2 = mz(m, r + 1);
        Mat both(z1.rows(), z1.cols() + z2.cols());
        both.setBlock(0, 0, z1);
        both.setBlock(0, z1.cols(), z2);
        if (rank(both) != z1.cols())
            t.failures.push_back("MZ is not decreasing" + deg(m));
    }
    return t;
}

}  // namespace jml
