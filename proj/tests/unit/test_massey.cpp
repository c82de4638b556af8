#include "doctest.h"

#include "jml/massey.hpp"
#include "jml/torus.hpp"

#include <random>

using namespace jml;

namespace {

Representation heisenbergRep()
{
    Representation r = Representation::trivial(1, {"a", "b", "u"}, {0, 0, 1});
    r.relators = {"a b a^-1 b^-1", "u a u^-1 a^-1", "u b u^-1 b^-1 a^-1"};
    return r;
}

DeltaComplex heisenbergModel(const Representation& rep)
{
    LatticeSpec s;
    s.d = 2;
    s.N = 1;
    s.m = 2;
    s.S = {{1, 1}, {0, 1}};
    s.shift = {0, 0};
    s.generators = {"a", "b"};
    return latticeTorus(s, rep);
}

Representation torusRep()
{
    Representation r = Representation::trivial(1, {"a", "u"}, {0, 1});
    r.relators = {"u a u^-1 a^-1"};
    return r;
}

DeltaComplex torusModel(const Representation& rep)
{
    LatticeSpec s;
    s.d = 1;
    s.N = 3;
    s.m = 1;
    s.S = {{1}};
    s.shift = {0};
    s.generators = {"a"};
    return latticeTorus(s, rep);
}

Vec randomVec(int n, std::mt19937& gen)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    Vec v;
    for (int k = 0; k < n; ++k)
        v.push_back(Scalar(dist(gen)));
    return v;
}

}  // namespace

TEST_CASE("cochains are the dual of the chain complex")
{
    auto rep = heisenbergRep();
    auto dc = heisenbergModel(rep);
    for (auto lam : {Scalar(1), Scalar(3), Scalar(mpq_class(1, 2), mpq_class(1))}) {
        auto cx = cochainsAt(dc, rep, lam);
        auto chains = buildComplexAt(toCellData(dc), rep, lam);
        for (int k = 0; k < cx.top(); ++k) {
            CHECK((cx.coboundary(k + 1) * cx.coboundary(k)).isZero());
            CHECK(cx.coboundary(k) == chains.boundary(k + 1).transpose());
        }
    }
}

TEST_CASE("cup with theta satisfies Leibniz")
{
    std::mt19937 gen(7);
    auto rep = heisenbergRep();
    auto dc = heisenbergModel(rep);
    MasseyEngine e(dc, rep, Scalar(2));
    for (int k = 0; k + 2 <= e.top(); ++k) {
        Vec y = randomVec(e.complex().dim(k), gen);
        Vec lhs = e.complex().coboundary(k + 1) * (e.cup(k) * y);
        Vec rhs = e.cup(k + 1) * (e.complex().coboundary(k) * y);
        for (auto& x : rhs)
            x = -x;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("torus and circle lengths")
{
    auto rep = torusRep();
    auto dc = torusModel(rep);
    MasseyEngine one(dc, rep, Scalar(1));
    CHECK(one.length(0) == 1);
    CHECK(one.length(1) == 1);
    CHECK(one.length(2) == 0);
    MasseyEngine two(dc, rep, Scalar(2));
    for (int k = 0; k <= 2; ++k)
        CHECK(two.length(k) == 0);

    auto crep = Representation::trivial(1, {"u"}, {1});
    LatticeSpec s;
    s.d = 0;
    auto circle = latticeTorus(s, crep);
    MasseyEngine c(circle, crep, Scalar(1));
    CHECK(c.length(0) == 1);
    CHECK(c.length(1) == 0);
}

TEST_CASE("heisenberg length two with witness")
{
    auto rep = heisenbergRep();
    auto dc = heisenbergModel(rep);
    for (auto mode : {Deformation::Literal, Deformation::Exponential}) {
        MasseyOptions o;
        o.mode = mode;
        MasseyEngine e(dc, rep, Scalar(1), o);
        CHECK(e.cohomologyDim(1) == 2);
        CHECK(e.length(0) == 1);
        CHECK(e.length(1) == 2);
        CHECK(e.length(2) == 1);
        auto w = e.witness(1);
        CHECK(w.omega.size() == 2);
        CHECK(e.verifyChain(w));
        for (int r = 1; r <= 3; ++r) {
            auto t = e.stageCheck(r);
            CHECK(t.failures.empty());
        }
    }
}

TEST_CASE("length is independent of the cocycle representative")
{
    std::mt19937 gen(11);
    auto rep = heisenbergRep();
    auto dc = heisenbergModel(rep);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 2; ++trial) {
        MasseyOptions o;
        o.mode = Deformation::Exponential;
        for (int v = 0; v < dc.count(0); ++v)
            o.epsilon.push_back(dist(gen));
        MasseyEngine e(dc, rep, Scalar(1), o);
        CHECK(e.length(1) == 2);
        CHECK(e.length(0) == 1);
    }
}
