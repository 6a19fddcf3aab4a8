#include "doctest.h"

#include <random>

#include "hallforge/partition.hpp"
#include "hallforge/report.hpp"

using namespace hallforge;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

Partition random_partition(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 12), part(1, 40);
    std::vector<Int> parts(static_cast<std::size_t>(len(rng)));
    for (auto& p : parts) p = part(rng);
    return Partition::from_unsorted(std::move(parts));
}

IncrementVector random_vector(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), entry(-20, 20);
    std::vector<Int> e(static_cast<std::size_t>(len(rng)));
    for (auto& x : e) x = entry(rng);
    return e;
}

}  // namespace

TEST_CASE("size and alternating size") {
    CHECK(size(Partition{}) == 0);
    CHECK(size(P({6, 5})) == 11);
    CHECK(size(P({20, 13, 9, 6, 2, 1})) == 51);
    CHECK(size(parse_partition("1^4 3^2 7^3 9 11")) == 51);

    CHECK(alt_size(Partition{}) == 0);
    CHECK(alt_size(P({6, 5})) == 1);
    CHECK(alt_size(P({4, 3, 2, 1})) == 2);
    CHECK(alt_size(IncrementVector({1, 1, 2, 1})) == 1);
}

TEST_CASE("construction rejects non-partitions") {
    CHECK_THROWS_AS(P({1, 2}), Error);
    CHECK_THROWS_AS(P({3, 0}), Error);
    CHECK_THROWS_AS(P({-1}), Error);
    try {
        P({2, 3});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAPartition);
    }
    CHECK(Partition::from_unsorted({1, 3, 2}) == P({3, 2, 1}));
}

TEST_CASE("multiplicity view matches parts") {
    const Partition p = parse_partition("1^4 3^2 7^3 9 11");
    CHECK(p.parts() == std::vector<Int>{11, 9, 7, 7, 7, 3, 3, 1, 1, 1, 1});
    CHECK(p.multiplicity(1) == 4);
    CHECK(p.multiplicity(7) == 3);
    CHECK(p.multiplicity(5) == 0);
    CHECK(Partition::from_multiplicities(p.multiplicities()) == p);

    Int weighted = 0, count = 0;
    for (auto [part, m] : p.multiplicities()) {
        weighted += part * m;
        count += m;
    }
    CHECK(weighted == p.size());
    CHECK(count == static_cast<Int>(p.length()));
}

TEST_CASE("multiset union and difference") {
    CHECK(multiset_union(Partition{}, P({4, 2})) == P({4, 2}));
    CHECK(multiset_union(P({3, 1}), P({3, 2})) == P({3, 3, 2, 1}));
    CHECK(multiset_union(P({7, 7, 7}), P({7})) == P({7, 7, 7, 7}));

    CHECK(multiset_diff(P({5, 2}), Partition{}) == P({5, 2}));
    CHECK(multiset_diff(P({7, 7, 3}), P({7})) == P({7, 3}));
    try {
        multiset_diff(P({5, 1}), P({3}));
        FAIL("expected UnderflowAtPart");
    } catch (const UnderflowAtPart& e) {
        CHECK(e.part() == 3);
        CHECK(e.kind() == ErrorKind::UnderflowAtPart);
    }
}

TEST_CASE("componentwise arithmetic pads with zeros") {
    CHECK(comp_add(IncrementVector({6, 5}), IncrementVector({1, 1, 2, 1})) == IncrementVector({7, 6, 2, 1}));
    CHECK(comp_add(IncrementVector{}, IncrementVector({3, 2})) == IncrementVector({3, 2}));
    CHECK(comp_add(IncrementVector({4, 3, 2, 1}), IncrementVector({1, 1, 1, 1, 1})) ==
          IncrementVector({5, 4, 3, 2, 1}));
    CHECK(comp_add(IncrementVector({6, 5}), IncrementVector({1, 1, 4, 3})) == IncrementVector({7, 6, 4, 3}));

    CHECK(comp_sub(IncrementVector({4, 3, 2, 1}), IncrementVector({3, 2})) == IncrementVector({1, 1, 2, 1}));
    CHECK(comp_sub(IncrementVector({4, 1}), IncrementVector{}) == IncrementVector({4, 1}));
    CHECK(comp_sub(IncrementVector({3, 2}), IncrementVector({4, 3, 2, 1})) == IncrementVector({-1, -1, -2, -1}));
}

TEST_CASE("increment vector to partition") {
    CHECK(IncrementVector({3, 2, 0, 0}).to_partition() == P({3, 2}));
    CHECK(IncrementVector{}.to_partition() == Partition{});
    CHECK_THROWS_AS(IncrementVector({3, 0, 1}).to_partition(), Error);
    CHECK_THROWS_AS(IncrementVector({1, 2}).to_partition(), Error);
    CHECK_THROWS_AS(IncrementVector({2, -1}).to_partition(), Error);
}

TEST_CASE("parse and format") {
    CHECK(parse_partition("1^4 3^2 7^3 9 11").parts() == std::vector<Int>{11, 9, 7, 7, 7, 3, 3, 1, 1, 1, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("   ") == Partition{});
    CHECK(parse_partition("1, 3,2") == P({3, 2, 1}));
    CHECK(parse_partition("5") == P({5}));
    CHECK(parse_partition("3^0 1") == P({1}));

    try {
        parse_partition("3,x");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 2);
        CHECK(e.kind() == ErrorKind::SyntaxError);
    }
    CHECK_THROWS_AS(parse_partition("3,"), SyntaxError);
    CHECK_THROWS_AS(parse_partition("3^"), SyntaxError);
    CHECK_THROWS_AS(parse_partition("3a"), SyntaxError);
    CHECK_THROWS_AS(parse_partition("0,2"), Error);

    CHECK(format_partition(P({11, 9, 7})) == "11,9,7");
    CHECK(format_partition(Partition{}) == "");
    CHECK(display(Partition{}) == "()");
    CHECK(format_multiplicities(parse_partition("11,9,7,7,7,3,3,1,1,1,1")) == "1^4 3^2 7^3 9 11");
}

TEST_CASE("json form") {
    const Json j = to_json(P({6, 5}));
    CHECK(j.dump() == R"({"parts":[6,5],"size":11,"length":2,"alt_size":1})");
}

TEST_CASE("canonical order: size, then parts descending") {
    std::vector<Partition> v{P({2, 1}), P({3}), Partition{}, P({1})};
    sort_canonical(v);
    CHECK(v == std::vector<Partition>{Partition{}, P({1}), P({3}), P({2, 1})});
}

TEST_CASE("overflow is reported") {
    CHECK_THROWS_AS(P({INT64_MAX, INT64_MAX}), Error);
    CHECK_THROWS_AS(comp_add(IncrementVector({INT64_MAX}), IncrementVector({1})), Error);
}

TEST_CASE("property: union adds size and length, difference undoes it") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const Partition a = random_partition(rng), b = random_partition(rng);
        const Partition u = multiset_union(a, b);
        CHECK(u.size() == a.size() + b.size());
        CHECK(u.length() == a.length() + b.length());
        CHECK(multiset_diff(u, b) == a);
    }
}

TEST_CASE("property: comp_add forms a commutative monoid") {
    std::mt19937_64 rng(11);
    // Equality up to trailing zeros is not needed: lengths follow max().
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_vector(rng, 8), b = random_vector(rng, 8), c = random_vector(rng, 8);
        CHECK(comp_add(a, b) == comp_add(b, a));
        CHECK(comp_add(comp_add(a, b), c) == comp_add(a, comp_add(b, c)));
        CHECK(comp_add(a, IncrementVector{}) == a);
    }
}

TEST_CASE("property: alt_size is additive under the length guard") {
    std::mt19937_64 rng(13);
    int tested = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        const auto a = random_vector(rng, 8), b = random_vector(rng, 8);
        const bool guard = b.entries.size() <= a.entries.size() ||
                           (a.entries.size() % 2 == 0 && b.entries.size() % 2 == 0);
        if (!guard) continue;
        ++tested;
        CHECK(alt_size(comp_add(a, b)) == alt_size(a) + alt_size(b));
    }
    CHECK(tested > 1000);
}

TEST_CASE("property: parse inverts format on random partitions") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10000; ++trial) {
        const Partition p = random_partition(rng);
        REQUIRE(parse_partition(format_partition(p)) == p);
        REQUIRE(parse_partition(format_multiplicities(p)) == p);
    }
}
