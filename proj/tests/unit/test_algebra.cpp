#include "doctest.h"

#include "jml/linalg.hpp"
#include "jml/monodromy.hpp"
#include "jml/snf.hpp"
#include "oracles.hpp"

#include <random>

using namespace jml;

TEST_CASE("scalar arithmetic in Q(i)")
{
    Scalar a = Scalar::parse("1/2+3/4*i");
    Scalar b = Scalar::parse("-i");
    CHECK((a * a.inverse()).isOne());
    CHECK((b * b) == Scalar(-1));
    CHECK(Scalar::parse("2/4").str() == "1/2");
}

TEST_CASE("polynomial parse and arithmetic")
{
    Poly p = Poly::parse("t^2-3t+1");
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1) == Scalar(-3));
    Poly q = Poly::parse("(t-1)") * Poly::parse("t-2");
    CHECK(q == Poly::parse("t^2 - 3*t + 2"));
    CHECK(gcd(q, Poly::parse("t^2-1")) == Poly::parse("t-1"));
    CHECK(Poly::parse("(1/2)*t - i").coeff(0) == -Scalar::i());
}

TEST_CASE("rank and kernel")
{
    Mat a{{Scalar(1), Scalar::i()}, {Scalar::i(), Scalar(-1)}};
    auto rk = rankAndKernel(a);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(isZero(a * rk.kernel[0]));
    CHECK(rankAndKernel(Mat::identity(3)).rank == 3);
    CHECK(rankAndKernel(Mat(2, 4)).kernel.size() == 4);
}

TEST_CASE("smith normal form basics")
{
    PolyMat a{{Poly::t(), Poly(1)}, {Poly(0), Poly::t()}};
    auto s = snfOverPoly(a);
    CHECK(s.U * a * s.V == s.D);
    auto f = s.factors();
    REQUIRE(f.size() == 2);
    CHECK(f[0].isOne());
    CHECK(f[1] == Poly::parse("t^2"));
}

TEST_CASE("root classes")
{
    auto rc = rootClasses({Poly::parse("t-1"), Poly::parse("(t-1)*(t-1)*(t-2)") });
    REQUIRE(rc.size() == 2);
    CHECK(rc[0].q == Poly::parse("t-1"));
    CHECK(rc[0].multiplicities == std::vector<int>{1, 2});
    CHECK(rc[1].multiplicities == std::vector<int>{0, 1});
    CHECK(multiplicityAt({Poly::parse("t-1"), Poly::parse("t^2-2t+1")}, Scalar(1)) == std::vector<int>{1, 2});
}

TEST_CASE("extension field arithmetic")
{
    auto ctx = std::make_shared<const ExtensionField>(std::vector<Gaussian>{Gaussian(1), Gaussian(-3), Gaussian(1)});
    Scalar x = Scalar::generator(ctx);
    CHECK((x * x - x * Scalar(3) + Scalar(1)).isZero());
    CHECK((x * x.inverse()).isOne());
    CHECK(!x.isBase());
    auto bad = std::make_shared<const ExtensionField>(std::vector<Gaussian>{Gaussian(-1), Gaussian(0), Gaussian(1)});
    Scalar y = Scalar::generator(bad) - Scalar(1);
    CHECK_THROWS_AS(y.inverse(), std::domain_error);
}

TEST_CASE("smith normal form against determinantal divisors")
{
    std::mt19937 gen(17);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 1 + static_cast<int>(gen() % 4), cols = 1 + static_cast<int>(gen() % 4);
        PolyMat a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (gen() % 3)
                    a(i, j) = oracle::randomPoly(gen, static_cast<int>(gen() % 3), 2);
        auto s = snfOverPoly(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(oracle::det(s.U).degree() == 0);
        CHECK(oracle::det(s.V).degree() == 0);
        CHECK(s.factors() == oracle::invariantFactors(a));
    }
}

TEST_CASE("Laurent smith form strips powers of t")
{
    LaurentMat a{{LaurentPoly(Poly::parse("t-1"), -2), LaurentPoly(Poly(0))},
                 {LaurentPoly(Poly(0)), LaurentPoly(Poly::parse("(t-1)*(t+2)"), 3)}};
    auto s = snfOverLaurent(a);
    CHECK(s.rank == 2);
    CHECK(s.nonUnits() == std::vector<Poly>{Poly::parse("t-1"), Poly::parse("(t-1)*(t+2)")});
}

TEST_CASE("squarefree decomposition and multiplicities")
{
    Poly p = Poly::parse("(t-1)^3*(t+1)*(t^2+1)^2");
    auto parts = squarefreeDecomposition(p);
    REQUIRE(parts.size() >= 3);
    CHECK(parts[0] == Poly::parse("t+1"));
    CHECK(parts[1] == Poly::parse("t^2+1"));
    CHECK(parts[2] == Poly::parse("t-1"));
    CHECK(multiplicityOf(p, Poly::parse("t-1")) == 3);
    CHECK(multiplicityOf(p, Poly::parse("t^2+1")) == 2);
    CHECK(multiplicityAt({p}, Scalar::i()) == std::vector<int>{2});
}

TEST_CASE("eigenvalue queries")
{
    auto q = LambdaQuery::parse("t^2-3t+1");
    CHECK(!q.isValue());
    CHECK(LambdaQuery::parse("t - 1/2").isValue());
    CHECK(*LambdaQuery::parse("-i").value == -Scalar::i());
    CHECK_THROWS_AS(LambdaQuery::parse("(t-1)^2"), std::invalid_argument);
    std::vector<Poly> f{Poly::parse("t^2-3t+1"), Poly::parse("(t^2-3t+1)^2")};
    CHECK(blockSizes(f, q) == std::vector<int>{1, 2});
    CHECK(blockSizes(f, LambdaQuery::parse("1")).empty());
    CHECK_THROWS_AS(blockSizes({Poly::parse("(t-1)*(t-2)")}, LambdaQuery::parse("(t-1)*(t-3)")),
                    std::invalid_argument);
}

TEST_CASE("jordan blocks from invariant factors match ranks of powers")
{
    std::mt19937 gen(23);
    for (int trial = 0; trial < 15; ++trial) {
        // conjugate a block matrix with eigenvalues in {1, 2}
        int n = 2 + static_cast<int>(gen() % 3);
        Mat j(n, n);
        for (int i = 0; i < n; ++i) {
            j(i, i) = Scalar(1 + static_cast<long>(gen() % 2));
            if (i + 1 < n && gen() % 2)
                j(i, i + 1) = Scalar(1);
        }
        Mat p = oracle::randomInvertible(gen, n);
        Mat a = p * j * *inverse(p);
        auto f = snfOverPoly(characteristicMatrix(a)).factors();
        for (auto lam : {Scalar(1), Scalar(2), Scalar(3)}) {
            CHECK(maxBlock(multiplicityAt(f, lam)) == oracle::maxJordanBlock(a, lam));
            CHECK(maxBlock(blockSizesByRank(a, lam)) == oracle::maxJordanBlock(a, lam));
        }
    }
}
