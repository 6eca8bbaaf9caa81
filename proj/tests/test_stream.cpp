#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "parstream/stream.hpp"

using namespace parstream;

namespace {

eval_context async_ctx(unsigned workers) {
    return eval_context::async(std::make_shared<scheduler>(workers));
}

// Stream of from..to-1 whose tail thunks bump a counter: the
// instrumentation behind the laziness and single-force checks.
stream<std::int64_t> counted_range(std::int64_t from, std::int64_t to,
                                   std::shared_ptr<std::atomic<int>> hits,
                                   const eval_context& ctx) {
    if (from >= to) return {};
    return stream<std::int64_t>::cons(from, delay(
                                                [=] {
                                                    ++*hits;
                                                    return counted_range(from + 1, to, hits, ctx);
                                                },
                                                ctx));
}

stream<std::int64_t> naturals_from(std::int64_t k) {
    return stream<std::int64_t>::cons(
        k, delay([k] { return naturals_from(k + 1); }, eval_context::lazy()));
}

std::vector<std::int64_t> iota_vec(std::int64_t from, std::int64_t count) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

TEST_CASE("cons cells hold a head and a suspended tail") {
    auto single = stream<int>::cons(1, suspension<stream<int>>::ready({}));
    CHECK(to_vector(single) == std::vector<int>{1});

    auto two = stream<int>::cons(
        1, delay([] { return stream<int>::cons(2, suspension<stream<int>>::ready({})); },
                 eval_context::lazy()));
    CHECK(to_vector(two) == std::vector<int>{1, 2});
}

TEST_CASE("head and extraction never force the tail") {
    auto s = stream<int>::cons(
        0, delay([]() -> stream<int> { throw std::runtime_error("tail forced"); },
                 eval_context::lazy()));
    CHECK(s.head() == 0);
    CHECK_FALSE(s.tail_suspension().evaluated());
    CHECK_FALSE(s.tail_defined());
    CHECK_THROWS_AS(s.tail(), std::runtime_error);
}

TEST_CASE("empty streams reject head and tail") {
    stream<int> e;
    CHECK(e.is_empty());
    CHECK_THROWS_AS(e.head(), empty_stream_error);
    CHECK_THROWS_AS(e.tail(), empty_stream_error);
    CHECK_FALSE(e.tail_defined());
}

TEST_CASE("tail forces and flips tail_defined") {
    auto s = range(5, 7, 1, eval_context::lazy());
    CHECK(s.head() == 5);
    CHECK_FALSE(s.tail_defined());
    auto t = s.tail();
    CHECK(s.tail_defined());
    CHECK(t.head() == 6);
}

TEST_CASE("range enumerates start..end-1 by step") {
    CHECK(to_vector(range(2, 5, 1, eval_context::lazy())) ==
          std::vector<std::int64_t>{2, 3, 4});
    CHECK(range(2, 2, 1, eval_context::lazy()).is_empty());
    CHECK(range(5, 2, 1, eval_context::lazy()).is_empty());
    CHECK(to_vector(range(0, 10, 3, eval_context::lazy())) ==
          std::vector<std::int64_t>{0, 3, 6, 9});
    CHECK_THROWS_AS(range(0, 10, 0, eval_context::lazy()), std::invalid_argument);
    CHECK(to_vector(range(2, 20000, 1, eval_context::lazy())).size() == 19998);
}

TEST_CASE("filter keeps matching elements in order") {
    auto evens = filter(range(1, 11, 1, eval_context::lazy()),
                        [](std::int64_t x) { return x % 2 == 0; });
    CHECK(to_vector(evens) == std::vector<std::int64_t>{2, 4, 6, 8, 10});
    CHECK(filter(stream<std::int64_t>{}, [](std::int64_t) { return true; }).is_empty());
    CHECK(filter(range(0, 10, 1, eval_context::lazy()),
                 [](std::int64_t) { return false; })
              .is_empty());
}

TEST_CASE("filtering a long sparse range neither overflows the stack nor drops hits") {
    auto sparse = filter(range(0, 200000, 1, eval_context::lazy()),
                         [](std::int64_t x) { return x % 1000 == 0; });
    auto v = to_vector(sparse);
    REQUIRE(v.size() == 200);
    CHECK(v.front() == 0);
    CHECK(v[1] == 1000);
    CHECK(v.back() == 199000);
}

TEST_CASE("map applies element-wise and preserves emptiness") {
    CHECK(map(stream<int>{}, [](int x) { return x; }).is_empty());
    auto doubled = map(from_vector(std::vector<int>{1, 2, 3}, eval_context::lazy()),
                       [](int x) { return x * 2; });
    CHECK(to_vector(doubled) == std::vector<int>{2, 4, 6});
}

TEST_CASE("map with identity reproduces the stream") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-100, 100);
    std::vector<int> xs(257);
    for (auto& x : xs) x = d(rng);
    auto s = from_vector(xs, eval_context::lazy());
    CHECK(to_vector(map(s, [](int x) { return x; })) == xs);
}

TEST_CASE("take cuts after n elements") {
    auto s = from_vector(std::vector<int>{1, 2, 3}, eval_context::lazy());
    CHECK(to_vector(take(s, 2)) == std::vector<int>{1, 2});
    CHECK(take(s, 0).is_empty());
    CHECK(to_vector(take(s, 10)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("take terminates an infinite stream") {
    CHECK(to_vector(take(naturals_from(0), 5)) ==
          std::vector<std::int64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("take forces nothing beyond the cut") {
    auto hits = std::make_shared<std::atomic<int>>(0);
    auto s = counted_range(0, 100, hits, eval_context::lazy());
    auto v = to_vector(take(s, 2));
    CHECK(v == std::vector<std::int64_t>{0, 1});
    CHECK(*hits == 1);  // only the tail holding element 1 was forced
}

TEST_CASE("force_all leaves every cell defined and is idempotent") {
    CHECK(force_all(stream<int>{}).is_empty());

    auto hits = std::make_shared<std::atomic<int>>(0);
    auto s = counted_range(0, 50, hits, eval_context::lazy());
    force_all(s);
    CHECK(*hits == 50);  // one force per tail, including the final empty
    for (auto t = s; !t.is_empty(); t = t.tail()) CHECK(t.tail_defined());
    force_all(s);
    CHECK(to_vector(s) == iota_vec(0, 50));
    CHECK(*hits == 50);  // traversals after the first re-force nothing
}

TEST_CASE("pipelines stay unevaluated until the first retrieval") {
    auto hits = std::make_shared<std::atomic<int>>(0);
    auto s = counted_range(0, 100, hits, eval_context::lazy());
    auto pipeline = take(
        map(filter(s, [](std::int64_t x) { return x % 2 == 0; }),
            [](std::int64_t x) { return x * 10; }),
        5);
    CHECK(*hits == 0);
    CHECK(to_vector(pipeline) == std::vector<std::int64_t>{0, 20, 40, 60, 80});
    CHECK(*hits < 100);  // no full traversal either
}

TEST_CASE("round trips through vectors preserve contents") {
    CHECK(to_vector(from_vector(std::vector<int>{}, eval_context::lazy())).empty());
    CHECK(to_vector(from_vector(std::vector<int>{3, 1, 2}, eval_context::lazy())) ==
          std::vector<int>{3, 1, 2});

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    std::vector<std::int64_t> xs(10000);
    for (auto& x : xs) x = d(rng);
    CHECK(to_vector(from_vector(xs, eval_context::lazy())) == xs);
    auto actx = async_ctx(2);
    CHECK(to_vector(from_vector(xs, actx)) == xs);
}

TEST_CASE("lazy and async pipelines compute the same elements") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int round = 0; round < 10; ++round) {
        std::vector<std::int64_t> xs(200);
        for (auto& x : xs) x = d(rng);
        auto run = [&xs](const eval_context& ctx) {
            auto s = map(filter(from_vector(xs, ctx),
                                [](std::int64_t x) { return x % 3 != 0; }),
                         [](std::int64_t x) { return x * x - 1; });
            return to_vector(take(s, 40));
        };
        auto actx = async_ctx(1 + round % 4);
        CHECK(run(eval_context::lazy()) == run(actx));
    }
}
