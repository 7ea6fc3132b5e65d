#include "doctest.h"

#include "support.hpp"
#include "tristar/explorer.hpp"
#include "tristar/generators.hpp"
#include "tristar/prover.hpp"

using namespace tristar;
using namespace tristar::explorer;
using namespace tristar::testing;

TEST_CASE("objective")
{
    CHECK(objective(constant_colouring(6, 3), Objective::double_star) == 6);
    CHECK(objective(affine_colouring(2, 2), Objective::triple) == 4);
    CHECK(objective(proper_k4(), Objective::triple) == 2);
    CHECK(objective(affine_colouring(2, 2), Objective::component) == 4);
    CHECK(parse_objective("double") == Objective::double_star);
    CHECK_FALSE(parse_objective("quad").has_value());
    CHECK(to_string(Objective::component) == "component");
}

TEST_CASE("config validation")
{
    SearchConfig c;
    CHECK_NOTHROW(validate(c));
    c.iterations = 0;
    CHECK_THROWS_WITH(validate(c), doctest::Contains("iterations"));
    c = {};
    c.cooling = Rational(1);
    CHECK_THROWS_WITH(validate(c), doctest::Contains("cooling"));
    c = {};
    c.restarts = 0;
    CHECK_THROWS(validate(c));
    c = {};
    c.n = 1;
    CHECK_THROWS(validate(c));
}

TEST_CASE("n=4, r=3, triple reaches the exhaustive minimum 2")
{
    SearchConfig c;
    c.n = 4;
    c.r = 3;
    c.iterations = 2000;
    c.restarts = 2;
    const auto result = anneal(c);
    CHECK(result.best_objective == 2);
    CHECK(objective(result.best_colouring, Objective::triple) == 2);
    CHECK(result.ratio == Rational(1));
}

TEST_CASE("same seed gives identical runs, threads included")
{
    SearchConfig c;
    c.n = 7;
    c.r = 3;
    c.objective = Objective::double_star;
    c.iterations = 1500;
    c.restarts = 3;
    c.seed = 99;
    const auto a = anneal(c);
    const auto b = anneal(c);
    c.threads = 3;
    const auto threaded = anneal(c);
    CHECK(a.log == b.log);
    CHECK(a.log == threaded.log);
    CHECK(a.best_colouring.colours() == threaded.best_colouring.colours());
    CHECK(a.best_restart == threaded.best_restart);
    c.seed = 100;
    CHECK(anneal(c).log != a.log);
}

TEST_CASE("results are consistent with the returned colouring and never beat ground truth")
{
    for (auto kind : {Objective::double_star, Objective::triple, Objective::component}) {
        SearchConfig c;
        c.n = 5;
        c.r = 3;
        c.objective = kind;
        c.iterations = 3000;
        c.restarts = 2;
        const auto result = anneal(c);
        CHECK(objective(result.best_colouring, kind) == result.best_objective);
        // exhaustive minimum for n=5, r=3 is 3 for all three objectives
        CHECK(result.best_objective >= 3);
        for (std::size_t i = 1; i < result.log.size(); ++i)
            if (result.log[i].restart == result.log[i - 1].restart)
                CHECK(result.log[i].best < result.log[i - 1].best);
    }
}

TEST_CASE("component search on n=8, r=3 stays at or above the affine optimum")
{
    SearchConfig c;
    c.n = 8;
    c.r = 3;
    c.objective = Objective::component;
    c.iterations = 5000;
    c.restarts = 2;
    const auto result = anneal(c);
    CHECK(result.best_objective >= 4);
    CHECK(objective(affine_colouring(2, 2), Objective::component) == 4);
}

TEST_CASE("triple search never crosses the theorem floor")
{
    SearchConfig c;
    c.n = 8;
    c.r = 3;
    c.iterations = 3000;
    c.restarts = 2;
    CHECK(anneal(c).best_objective >= 4);
}
