#pragma once

// Reference computations for tests. They use only the scalar and polynomial
// types, never the library's elimination, Smith form or homology code.

#include "jml/poly.hpp"
#include "jml/snf.hpp"

#include <random>
#include <vector>

namespace oracle {

using jml::Matrix;
using jml::Poly;
using jml::Scalar;
using ScalarMat = Matrix<Scalar>;

/// Rank by plain Gaussian elimination.
inline int rank(ScalarMat a)
{
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = r;
        while (p < a.rows() && a(p, c).isZero())
            ++p;
        if (p == a.rows())
            continue;
        for (int k = 0; k < a.cols(); ++k)
            std::swap(a(r, k), a(p, k));
        for (int i = r + 1; i < a.rows(); ++i) {
            if (a(i, c).isZero())
                continue;
            Scalar f = a(i, c) / a(r, c);
            for (int k = c; k < a.cols(); ++k)
                a(i, k) -= f * a(r, k);
        }
        ++r;
    }
    return r;
}

/// Largest Jordan block of a at lambda from the ranks of (a - lambda)^j.
inline int maxJordanBlock(const ScalarMat& a, const Scalar& lambda)
{
    const int n = a.rows();
    ScalarMat shifted = a - ScalarMat::identity(n) * lambda;
    ScalarMat p = ScalarMat::identity(n);
    int prev = n, j = 0;
    while (true) {
        p = p * shifted;
        int r = oracle::rank(p);
        if (r == prev)
            return j;
        prev = r;
        ++j;
    }
}

/// Determinant by cofactor expansion along the first row.
inline Poly det(const Matrix<Poly>& a)
{
    const int n = a.rows();
    if (n == 0)
        return Poly(1);
    if (n == 1)
        return a(0, 0);
    Poly out(0);
    for (int c = 0; c < n; ++c) {
        if (a(0, c).isZero())
            continue;
        Matrix<Poly> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int k = 0, kk = 0; k < n; ++k)
                if (k != c)
                    minor(r - 1, kk++) = a(r, k);
        Poly term = a(0, c) * det(minor);
        if (c % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors d_k / d_{k-1} from the gcds d_k of all k x k minors.
inline std::vector<Poly> invariantFactors(const Matrix<Poly>& a)
{
    std::vector<Poly> out;
    Poly prev(1);
    for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<std::vector<int>> rows, cols;
        std::vector<int> cur;
        subsets(a.rows(), k, 0, cur, rows);
        subsets(a.cols(), k, 0, cur, cols);
        Poly g(0);
        for (const auto& rs : rows)
            for (const auto& cs : cols) {
                Matrix<Poly> m(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        m(i, j) = a(rs[i], cs[j]);
                g = jml::gcd(g, det(m));
            }
        if (g.isZero())
            break;
        g = g.monic();
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline Scalar randomScalar(std::mt19937& gen, int bound, bool gaussian = false)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    if (!gaussian)
        return Scalar(d(gen));
    return Scalar(mpq_class(d(gen)), mpq_class(d(gen)));
}

inline Poly randomPoly(std::mt19937& gen, int degree, int bound)
{
    std::vector<Scalar> c;
    for (int k = 0; k <= degree; ++k)
        c.push_back(randomScalar(gen, bound));
    return Poly(c);
}

/// Product of random unit triangular matrices with a random nonzero diagonal.
inline ScalarMat randomInvertible(std::mt19937& gen, int n, int bound = 2)
{
    ScalarMat l = ScalarMat::identity(n), u = ScalarMat::identity(n);
    std::uniform_int_distribution<int> nz(1, bound);
    for (int i = 0; i < n; ++i) {
        u(i, i) = Scalar(nz(gen) * (gen() % 2 ? 1 : -1));
        for (int j = 0; j < i; ++j) {
            l(i, j) = randomScalar(gen, bound);
            u(j, i) = randomScalar(gen, bound);
        }
    }
    return l * u;
}

}  // namespace oracle
