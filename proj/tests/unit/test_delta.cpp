#include "doctest.h"

#include "jml/delta.hpp"
#include "jml/torus.hpp"

using namespace jml;

namespace {

Representation heisenbergRep()
{
    Representation r = Representation::trivial(1, {"a", "b", "u"}, {0, 0, 1});
    r.relators = {"a b a^-1 b^-1", "u a u^-1 a^-1", "u b u^-1 b^-1 a^-1"};
    return r;
}

LatticeSpec heisenbergLattice()
{
    LatticeSpec s;
    s.d = 2;
    s.N = 1;
    s.m = 2;
    s.S = {{1, 1}, {0, 1}};
    s.shift = {0, 0};
    s.generators = {"a", "b"};
    return s;
}

}  // namespace

TEST_CASE("heisenberg lattice model")
{
    auto rep = heisenbergRep();
    auto dc = latticeTorus(heisenbergLattice(), rep);
    CHECK(dc.counts() == std::vector<int>{1, 19, 42, 24});
    checkDelta(dc, rep);
    auto tc = buildDirect(toCellData(dc), rep);
    auto tr = torsionReport(tc);
    CHECK(tr.warnings.empty());
    REQUIRE(tr.degrees.size() >= 2);
    CHECK(nilAt(tr.degrees[1], LambdaQuery::of(Scalar(1))) == 2);
    CHECK(nilAt(tr.degrees[0], LambdaQuery::of(Scalar(1))) == 1);
}

TEST_CASE("circle lattice model")
{
    auto rep = Representation::trivial(1, {"a", "u"}, {0, 1});
    rep.relators = {"u a u^-1 a^-1"};
    LatticeSpec s;
    s.d = 1;
    s.N = 3;
    s.m = 1;
    s.S = {{1}};
    s.shift = {0};
    s.generators = {"a"};
    auto dc = latticeTorus(s, rep);
    checkDelta(dc, rep);
    auto tr = torsionReport(buildDirect(toCellData(dc), rep));
    CHECK(tr.warnings.empty());
    CHECK(nilAt(tr.degrees[0], LambdaQuery::of(Scalar(1))) == 1);
    CHECK(nilAt(tr.degrees[1], LambdaQuery::of(Scalar(1))) == 1);
    CHECK(nilAt(tr.degrees[1], LambdaQuery::of(Scalar(2))) == 0);
}
