#include "jml/linalg.hpp"

#include <stdexcept>

namespace jml {

void checkSingleContext(const Mat& a)
{
    const ExtensionField* seen = nullptr;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            const auto& ctx = a(r, c).context();
            if (!ctx)
                continue;
            if (seen && seen != ctx.get() && seen->modulus() != ctx->modulus())
                throw std::invalid_argument("matrix mixes entries from different extension fields");
            seen = ctx.get();
        }
}

Rref rref(const Mat& a, bool withTransform)
{
    Rref out;
    out.reduced = a;
    Mat& m = out.reduced;
    if (withTransform)
        out.transform = Mat::identity(a.rows());
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m(r, col).isZero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row) {
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m(piv, c), m(row, c));
            if (withTransform)
                for (int c = 0; c < m.rows(); ++c)
                    std::swap(out.transform(piv, c), out.transform(row, c));
        }
        Scalar inv = m(row, col).inverse();
        if (!inv.isOne()) {
            for (int c = col; c < m.cols(); ++c)
                m(row, c) *= inv;
            if (withTransform)
                for (int c = 0; c < m.rows(); ++c)
                    out.transform(row, c) *= inv;
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).isZero())
                continue;
            Scalar f = m(r, col);
            for (int c = col; c < m.cols(); ++c)
                if (!m(row, c).isZero())
                    m(r, c) -= f * m(row, c);
            if (withTransform)
                for (int c = 0; c < m.rows(); ++c)
                    if (!out.transform(row, c).isZero())
                        out.transform(r, c) -= f * out.transform(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

RankKernel rankAndKernel(const Mat& a)
{
    checkSingleContext(a);
    Rref e = rref(a);
    RankKernel out;
    out.rank = static_cast<int>(e.pivots.size());
    std::vector<int> pivotRow(static_cast<std::size_t>(a.cols()), -1);
    for (int r = 0; r < out.rank; ++r)
        pivotRow[e.pivots[r]] = r;
    for (int free = 0; free < a.cols(); ++free) {
        if (pivotRow[free] >= 0)
            continue;
        Vec v(static_cast<std::size_t>(a.cols()), Scalar(0));
        v[free] = Scalar(1);
        for (int r = 0; r < out.rank; ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int rank(const Mat& a) { return static_cast<int>(rref(a).pivots.size()); }

Mat kernelMatrix(const Mat& a) { return Mat::fromColumns(a.cols(), rankAndKernel(a).kernel); }

std::optional<Vec> solve(const Mat& a, const Vec& b)
{
    Mat aug(a.rows(), a.cols() + 1);
    aug.setBlock(0, 0, a);
    for (int r = 0; r < a.rows(); ++r)
        aug(r, a.cols()) = b[r];
    Rref e = rref(aug);
    Vec x(static_cast<std::size_t>(a.cols()), Scalar(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(static_cast<int>(r), a.cols());
    }
    return x;
}

std::optional<Mat> solve(const Mat& a, const Mat& b)
{
    Mat aug(a.rows(), a.cols() + b.cols());
    aug.setBlock(0, 0, a);
    aug.setBlock(0, a.cols(), b);
    Rref e = rref(aug);
    Mat x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols())
            return std::nullopt;
        for (int c = 0; c < b.cols(); ++c)
            x(e.pivots[r], c) = e.reduced(static_cast<int>(r), a.cols() + c);
    }
    return x;
}

std::optional<Mat> inverse(const Mat& a)
{
    if (!a.square())
        throw std::invalid_argument("inverse of non-square matrix " + a.shape());
    auto x = solve(a, Mat::identity(a.rows()));
    if (!x || rank(a) != a.rows())
        return std::nullopt;
    return x;
}

Mat columnBasis(const Mat& a)
{
    Rref e = rref(a);
    Mat out(a.rows(), static_cast<int>(e.pivots.size()));
    for (int k = 0; k < out.cols(); ++k)
        for (int r = 0; r < a.rows(); ++r)
            out(r, k) = a(r, e.pivots[k]);
    return out;
}

Mat leftInverse(const Mat& a)
{
    Rref e = rref(a, true);
    if (static_cast<int>(e.pivots.size()) != a.cols())
        throw std::invalid_argument("left inverse requires full column rank");
    return e.transform.block(0, 0, a.cols(), a.rows());
}

Mat power(const Mat& a, int e)
{
    Mat r = Mat::identity(a.rows());
    for (int k = 0; k < e; ++k)
        r = r * a;
    return r;
}

Vec scaled(const Vec& v, const Scalar& s)
{
    Vec out = v;
    for (auto& x : out)
        x *= s;
    return out;
}

bool isZero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.isZero())
            return false;
    return true;
}

Vec Subquotient::coords(const Vec& z) const
{
    Vec all = coordMap * z;
    return Vec(all.begin() + boundaries.cols(), all.end());
}

Mat Subquotient::coords(const Mat& zs) const
{
    Mat all = coordMap * zs;
    return all.block(boundaries.cols(), 0, dim(), zs.cols());
}

Subquotient subquotient(const Mat& cycles, const Mat& bounds)
{
    Subquotient q;
    q.ambient = cycles.rows();
    q.boundaries = columnBasis(bounds);
    int nb = q.boundaries.cols();
    Mat joint(q.ambient, nb + cycles.cols());
    joint.setBlock(0, 0, q.boundaries);
    joint.setBlock(0, nb, cycles);
    Rref e = rref(joint);
    std::vector<Vec> extra;
    for (int p : e.pivots)
        if (p >= nb)
            extra.push_back(joint.column(p));
    q.complement = Mat::fromColumns(q.ambient, extra);
    Mat both(q.ambient, nb + q.complement.cols());
    both.setBlock(0, 0, q.boundaries);
    both.setBlock(0, nb, q.complement);
    q.coordMap = both.cols() ? leftInverse(both) : Mat(0, q.ambient);
    return q;
}

}  // namespace jml
