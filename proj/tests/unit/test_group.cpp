#include "doctest.h"

#include "jml/group.hpp"
#include "oracles.hpp"

#include <random>

using namespace jml;

namespace {

Representation randomRep(std::mt19937& gen)
{
    Representation r;
    r.n = 2;
    r.generators = {"a", "b", "u"};
    r.xi = {0, 0, 1};
    for (int k = 0; k < 3; ++k)
        r.images.push_back(oracle::randomInvertible(gen, 2));
    return r;
}

}  // namespace

TEST_CASE("word parsing")
{
    auto rep = Representation::trivial(1, {"a", "b", "u"}, {0, 0, 1});
    CHECK(GroupToken::parse("", rep).isIdentityWord());
    CHECK(GroupToken::parse("1", rep).isIdentityWord());
    CHECK(GroupToken::parse("a b^-1 * u^2", rep).xi(rep) == 2);
    CHECK_THROWS_AS(GroupToken::parse("c", rep), std::invalid_argument);
    CHECK_THROWS_AS(GroupToken::parse("a^", rep), std::invalid_argument);
}

TEST_CASE("evaluation is a representation and the star form an antirepresentation")
{
    std::mt19937 gen(3);
    auto rep = randomRep(gen);
    auto g = GroupToken::parse("a b^-1 u", rep);
    auto h = GroupToken::parse("u^-1 b a^2", rep);
    CHECK((g * h).evaluate(rep).rho == g.evaluate(rep).rho * h.evaluate(rep).rho);
    CHECK((g * g.inverse()).evaluate(rep).rho == Mat::identity(2));
    Scalar lambda(mpq_class(2, 3), mpq_class(1));
    CHECK(evalStarAt(g * h, rep, lambda) == evalStarAt(h, rep, lambda) * evalStarAt(g, rep, lambda));
    auto lit = GroupToken::literal(Mat{{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}}, 1);
    CHECK((g * lit).xi(rep) == 2);
}

TEST_CASE("Laurent evaluation specializes to the evaluation at lambda")
{
    std::mt19937 gen(5);
    auto rep = randomRep(gen);
    for (const char* w : {"", "a", "u", "u^-2 b a", "a u b^-1 u"}) {
        auto g = GroupToken::parse(w, rep);
        for (auto lambda : {Scalar(1), Scalar(-3), Scalar(mpq_class(1, 2), mpq_class(-2))})
            CHECK(specialize(evalStarLaurent(g, rep), lambda) == evalStarAt(g, rep, lambda));
    }
}

TEST_CASE("representation validation")
{
    auto rep = Representation::trivial(1, {"a", "u"}, {0, 1});
    rep.relators = {"u a u^-1 a^-1"};
    CHECK_NOTHROW(rep.validate());
    rep.images[0] = Mat{{Scalar(2)}};
    rep.images[1] = Mat{{Scalar(3)}};
    CHECK_NOTHROW(rep.validate());
    rep.relators.push_back("a a");
    CHECK_THROWS_WITH_AS(rep.validate(), doctest::Contains("relator 'a a'"), std::invalid_argument);
    rep.relators = {"u a"};
    CHECK_THROWS_WITH_AS(rep.validate(), doctest::Contains("nonzero xi"), std::invalid_argument);
    rep.relators.clear();
    rep.images[0] = Mat{{Scalar(0)}};
    CHECK_THROWS_AS(rep.validate(), std::invalid_argument);
}
