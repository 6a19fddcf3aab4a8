#include "doctest.h"

#include <random>
#include <set>
#include <thread>

#include "hallforge/bijection.hpp"
#include "hallforge/partition_sets.hpp"
#include "hallforge/trapezoid.hpp"
#include "oracles.hpp"

using namespace hallforge;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::GuardViolation;
}

Partition random_odd_party(Int width, Int max_size, std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> target(0, max_size);
    Int remaining = target(rng);
    std::vector<Int> parts;
    while (remaining > 0) {
        std::uniform_int_distribution<Int> k(1, std::min(width, (remaining + 1) / 2));
        parts.push_back(2 * k(rng) - 1);
        remaining -= parts.back();
    }
    return Partition::from_unsorted(parts);
}

}  // namespace

TEST_CASE("fresh growth state") {
    const GrowthState s = new_state(7);
    CHECK(s.counter == std::vector<Int>(7, 0));
    CHECK(s.actions == std::vector<Int>(7, 0));
    CHECK(s.image.entries.empty());
    CHECK_FALSE(s.last_part.has_value());
    CHECK(new_state(1).counter == std::vector<Int>{0});
    CHECK_FALSE(check_growth_identities(s).has_value());
}

TEST_CASE("feeding reproduces the worked example") {
    GrowthState s = new_state(7);
    s = feed(s, 11);
    CHECK(s.image.to_partition() == P({6, 5}));
    CHECK(s.counter == std::vector<Int>{1, 0, 0, 0, 0, 0, 0});
    s = feed(s, 9);
    CHECK(s.image.to_partition() == P({7, 6, 4, 3}));
    CHECK(s.counter == std::vector<Int>{0, 1, 0, 0, 0, 0, 0});
    s = feed(s, 7);
    CHECK(s.image.to_partition() == P({11, 9, 4, 3}));
    CHECK(s.counter == std::vector<Int>{3, 1, 0, 0, 0, 0, 0});
    s = feed(s, 7);
    CHECK(s.image.to_partition() == P({12, 10, 5, 4, 2, 1}));
    CHECK(s.counter == std::vector<Int>{2, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("feed preconditions") {
    const GrowthState s = feed(new_state(3), 3);
    CHECK(kind_of([&] { feed(s, 2); }) == ErrorKind::EvenPart);
    CHECK(kind_of([&] { feed(new_state(3), 7); }) == ErrorKind::PartTooLarge);
    CHECK(kind_of([&] { feed(feed(new_state(3), 1), 3); }) == ErrorKind::OrderViolation);
    CHECK(kind_of([&] { feed(s, -1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("feed adds the part to the size and one to the alternating size") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition lambda = random_odd_party(5, 40, rng);
        GrowthState s = new_state(5);
        for (Int part : lambda.parts()) {
            const GrowthState next = feed(s, part);
            CHECK(next.image.to_partition().size() == s.image.to_partition().size() + part);
            CHECK(alt_size(next.image) == alt_size(s.image) + 1);
            s = next;
        }
    }
}

TEST_CASE("phi on examples") {
    CHECK(phi(7, parse_partition("1^4 3^2 7^3 9 11")) == P({20, 13, 9, 6, 2, 1}));
    // Width 3 caps the counter for part 5 at zero, so both copies use row 1.
    CHECK(phi(3, P({5, 5})) == P({6, 4}));
    CHECK(phi(4, P({5, 5})) == P({4, 3, 2, 1}));
    CHECK(phi(5, P({5, 5})) == P({4, 3, 2, 1}));
    CHECK(phi(4, Partition{}) == Partition{});
    CHECK(kind_of([] { phi(3, P({7})); }) == ErrorKind::NotOddParty);
    CHECK(kind_of([] { phi(3, P({2})); }) == ErrorKind::NotOddParty);
    // phi((2k-1)^m) is the trapezoid [k+m-1, k] once the width is large enough.
    for (Int k = 1; k <= 5; ++k)
        for (Int m = 0; m <= 6; ++m)
            CHECK(phi(12, with_copies(Partition{}, 2 * k - 1, m)) == trapezoid_partition(k + m - 1, k));
}

TEST_CASE("trace of the worked example") {
    const auto steps = trace(7, parse_partition("1^4 3^2 7^3 9 11"));
    REQUIRE(steps.size() == 11);
    CHECK(steps[0].increment == IncrementVector({6, 5}));
    CHECK(steps[1].row == 2);
    CHECK(steps[1].increment == IncrementVector({1, 1, 4, 3}));
    CHECK(steps[2].row == 1);
    CHECK(steps[3].row == 3);
    CHECK(steps.back().counter == std::vector<Int>{1, 3, 2, 0, 1, 1, 0});
    CHECK(steps.back().actions[0] == 3);
    CHECK(steps.back().actions[1] == 3);
    CHECK(steps.back().actions[2] == 2);
    CHECK(steps.back().image == P({20, 13, 9, 6, 2, 1}));
    CHECK(run_growth(7, parse_partition("1^4 3^2 7^3 9 11")).counter == steps.back().counter);
    CHECK(trace(3, Partition{}).empty());
}

TEST_CASE("growth identities hold after every feed") {
    for (Int n = 1; n <= 6; ++n) {
        for (const auto& lambda : enumerate_reduced_odd(n)) {
            GrowthState s = new_state(n);
            for (Int part : lambda.parts()) {
                s = feed(s, part);
                const auto bad = check_growth_identities(s);
                CHECK_MESSAGE(!bad, *bad);
                CHECK(is_lecture_hall(s.image, n));
                CHECK(s.counter.back() == 0);
            }
        }
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const Partition lambda = random_odd_party(6, 60, rng);
        GrowthState s = new_state(6);
        for (Int part : lambda.parts()) {
            s = feed(s, part);
            REQUIRE_FALSE(check_growth_identities(s).has_value());
        }
    }
}

TEST_CASE("identity checker notices a corrupted state") {
    GrowthState s = feed(feed(new_state(4), 5), 3);
    s.image.entries[0] += 1;
    CHECK(check_growth_identities(s).has_value());
}

TEST_CASE("action counts step down by at most one on reduced inputs") {
    for (Int n = 1; n <= 6; ++n) {
        for (const auto& lambda : enumerate_reduced_odd(n)) {
            const auto d = run_growth(n, lambda).actions;
            for (std::size_t j = 0; j + 1 < d.size(); ++j) {
                CHECK(d[j] - d[j + 1] >= 0);
                CHECK(d[j] - d[j + 1] <= 1);
            }
        }
    }
}

TEST_CASE("block law and counter restoration") {
    std::mt19937_64 rng(9);
    for (Int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 150; ++trial) {
            const Partition lambda = random_odd_party(n, 30, rng);
            const Partition image = phi(n, lambda);
            for (Int k = 1; k <= n; ++k) {
                const Partition grown = with_copies(lambda, 2 * k - 1, n - k + 1);
                CHECK(phi(n, grown) == comp_add(image, trapezoid_partition(n, k)).to_partition());

                std::vector<Int> head;
                for (Int p : lambda.parts())
                    if (p >= 2 * k - 1) head.push_back(p);
                const GrowthState before = run_growth(n, Partition(head));
                GrowthState after = before;
                for (Int c = 0; c <= n - k; ++c) after = feed(after, 2 * k - 1);
                CHECK(after.counter == before.counter);
            }
        }
    }
}

TEST_CASE("phi is a size preserving bijection from ROP_N onto RL_N") {
    for (Int n = 1; n <= 7; ++n) {
        const auto rl = enumerate_reduced_lh(n);
        std::set<Partition> images;
        for (const auto& lambda : enumerate_reduced_odd(n)) {
            const Partition mu = phi(n, lambda);
            CHECK(mu.size() == lambda.size());
            CHECK(mu.alt_size() == static_cast<Int>(lambda.length()));
            CHECK(is_reduced_lh(mu, n));
            images.insert(mu);
        }
        CHECK(images == std::set<Partition>(rl.begin(), rl.end()));
    }
}

TEST_CASE("phi preserves reduced-ness both ways on truncated OP_N") {
    for (Int n = 1; n <= 5; ++n) {
        std::set<Partition> images;
        for (const auto& lambda : enumerate_op_up_to(n, 30)) {
            const Partition mu = phi(n, lambda);
            CHECK(is_lecture_hall(mu, n));
            CHECK(mu.size() == lambda.size());
            CHECK(mu.alt_size() == static_cast<Int>(lambda.length()));
            CHECK(is_reduced_lh(mu, n) == is_reduced_odd(lambda, n));
            CHECK(images.insert(mu).second);
        }
    }
}

TEST_CASE("reduce_odd") {
    const auto r1 = reduce_odd(3, P({1, 1, 1}));
    CHECK(r1.reduced == Partition{});
    CHECK(r1.counts == std::vector<Int>{1, 0, 0});

    for (const auto& lambda : enumerate_reduced_odd(3)) {
        const auto r = reduce_odd(3, lambda);
        CHECK(r.reduced == lambda);
        CHECK(r.counts == std::vector<Int>{0, 0, 0});
    }

    const auto r2 = reduce_odd(2, P({3, 3, 1, 1, 1}));
    CHECK(r2.reduced == P({1}));
    CHECK(r2.counts == std::vector<Int>{1, 2});
    CHECK(kind_of([] { reduce_odd(2, P({5})); }) == ErrorKind::NotOddParty);
}

TEST_CASE("reduce_lh") {
    const auto a = reduce_lh(3, P({5, 1}));
    CHECK(a.reduced == P({2, 1}));
    CHECK(a.counts == std::vector<Int>{1, 0, 0});

    const auto b = reduce_lh(3, P({4, 1}));
    CHECK(b.reduced == P({4, 1}));
    CHECK(b.counts == std::vector<Int>{0, 0, 0});

    const auto c = reduce_lh(4, P({4, 3, 2, 1}));
    CHECK(c.reduced == Partition{});
    CHECK(c.counts == std::vector<Int>{0, 0, 1, 0});

    CHECK(kind_of([] { reduce_lh(3, P({4, 3, 1})); }) == ErrorKind::NotLectureHall);

    // Reconstruction and order independence.
    for (Int n = 1; n <= 5; ++n) {
        for (const auto& mu : enumerate_lh_up_to(n, 40)) {
            const auto r = reduce_lh(n, mu);
            CHECK(is_reduced_lh(r.reduced, n));
            CHECK(reduce_lh(n, mu, StaircaseOrder::LargestFirst).reduced == r.reduced);
            IncrementVector rebuilt(r.reduced);
            for (Int k = 1; k <= n; ++k)
                for (Int j = 0; j < r.counts[static_cast<std::size_t>(k - 1)]; ++j)
                    rebuilt = comp_add(rebuilt, trapezoid_partition(n, k));
            CHECK(rebuilt.to_partition() == mu);
        }
    }
}

TEST_CASE("phi_inverse") {
    CHECK(phi_inverse(7, P({20, 13, 9, 6, 2, 1})) == parse_partition("1^4 3^2 7^3 9 11"));
    CHECK(phi_inverse(4, Partition{}) == Partition{});
    for (const auto& lambda : enumerate_op_up_to(3, 25)) CHECK(phi_inverse(3, phi(3, lambda)) == lambda);
    for (const auto& mu : enumerate_lh_up_to(4, 30)) CHECK(phi(4, phi_inverse(4, mu)) == mu);
    CHECK(kind_of([] { phi_inverse(3, P({4, 3, 1})); }) == ErrorKind::NotLectureHall);
    CHECK(kind_of([] { phi_inverse(10, Partition{}); }) == ErrorKind::WidthTooLarge);
}

TEST_CASE("phi_inverse table tolerates concurrent first use") {
    const auto inputs = enumerate_lh_up_to(6, 25);
    std::vector<std::jthread> workers;
    std::vector<int> failures(4, 0);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (const auto& mu : inputs)
                if (phi(6, phi_inverse(6, mu)) != mu) ++failures[static_cast<std::size_t>(t)];
        });
    }
    workers.clear();
    CHECK(failures == std::vector<int>(4, 0));
}
