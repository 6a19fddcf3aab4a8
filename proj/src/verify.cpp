#include "hallforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "hallforge/bijection.hpp"
#include "hallforge/partition_sets.hpp"
#include "hallforge/qseries.hpp"
#include "hallforge/trapezoid.hpp"

namespace hallforge {

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names{"thm2.1",        "skip",         "rlhp",   "lhp",      "refined-lhp",
                                                "refined-rlhp",  "q-analogue-2", "lemmas", "bijection"};
    return names;
}

namespace {

Json window_json(const BiSeries& s) { return Json{{"qmax", s.qmax()}, {"tmax", s.tmax()}}; }

// Compares every pair against the first series, failing on the first mismatch.
void compare_sides(VerificationReport& r, const std::vector<std::pair<std::string, const BiSeries*>>& sides) {
    const auto& [base_name, base] = sides.front();
    for (std::size_t j = 1; j < sides.size(); ++j) {
        const auto& [name, other] = sides[j];
        if (auto m = first_mismatch(*base, *other)) r.fail(base_name + " vs " + name + ": " + m->to_string());
    }
}

Int factorial(Int n) {
    Int f = 1;
    for (Int j = 2; j <= n; ++j) f = checked_mul(f, j);
    return f;
}

Partition random_odd_party(Int width, Int max_size, std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> target_dist(0, max_size);
    Int remaining = target_dist(rng);
    std::vector<Int> parts;
    while (remaining > 0) {
        const Int top_k = std::min(width, (remaining + 1) / 2);
        std::uniform_int_distribution<Int> k_dist(1, top_k);
        const Int part = 2 * k_dist(rng) - 1;
        parts.push_back(part);
        remaining -= part;
    }
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace

VerificationReport verify_rlhp(Int width) {
    VerificationReport r;
    r.identity = "rlhp";
    r.params = {{"N", width}};
    const auto rl = enumerate_reduced_lh(width);
    const auto rop = enumerate_reduced_odd(width);
    const BiSeries product = rhs_reduced_lhp(width);
    const BiSeries rl_side = gf_of_partitions(rl, TStatistic::None, product.qmax(), 0);
    const BiSeries rop_side = gf_of_partitions(rop, TStatistic::None, product.qmax(), 0);
    compare_sides(r, {{"RL", &rl_side}, {"ROP", &rop_side}, {"product", &product}});

    const Int nf = factorial(width);
    r.details["window"] = window_json(product);
    r.details["rl_count"] = rl.size();
    r.details["rop_count"] = rop.size();
    r.details["n_factorial"] = nf;
    r.details["product_at_q1"] = product.coefficient_sum();
    r.details["cardinality_readings"] = {
        {"OP_N", "infinite; the N! count cannot refer to it"},
        {"ROP_N", "checked: equals N!"},
    };
    if (static_cast<Int>(rl.size()) != nf) r.fail("|RL_N| = " + std::to_string(rl.size()) + " != N!");
    if (static_cast<Int>(rop.size()) != nf) r.fail("|ROP_N| = " + std::to_string(rop.size()) + " != N!");
    if (product.coefficient_sum() != nf) r.fail("product at q=1 is " + std::to_string(product.coefficient_sum()));
    r.details["series"] = product.to_string();
    return r;
}

VerificationReport verify_lhp(Int width, Int qmax) {
    VerificationReport r;
    r.identity = "lhp";
    r.params = {{"N", width}, {"qmax", qmax}};
    const auto l = enumerate_lh_up_to(width, qmax);
    const auto op = enumerate_op_up_to(width, qmax);
    const BiSeries l_side = gf_of_partitions(l, TStatistic::None, qmax, 0);
    const BiSeries op_side = gf_of_partitions(op, TStatistic::None, qmax, 0);
    const BiSeries product = rhs_lhp(width, qmax);
    compare_sides(r, {{"L", &l_side}, {"OP", &op_side}, {"product", &product}});
    r.details["window"] = window_json(product);
    r.details["l_count"] = l.size();
    r.details["op_count"] = op.size();
    return r;
}

VerificationReport verify_refined_lhp(Int width, Int qmax) {
    VerificationReport r;
    r.identity = "refined-lhp";
    r.params = {{"N", width}, {"qmax", qmax}};
    const Int tmax = qmax;
    const auto l = enumerate_lh_up_to(width, qmax);
    const auto op = enumerate_op_up_to(width, qmax);
    const BiSeries l_side = gf_of_partitions(l, TStatistic::AltSize, qmax, tmax);
    const BiSeries op_side = gf_of_partitions(op, TStatistic::Length, qmax, tmax);
    const BiSeries product = rhs_refined_lhp(width, qmax, tmax);
    compare_sides(r, {{"L[t^alt]", &l_side}, {"OP[t^length]", &op_side}, {"product", &product}});
    if (auto m = first_mismatch(product.at_t_one(), rhs_lhp(width, qmax)))
        r.fail("t=1 specialisation: " + m->to_string());
    r.details["window"] = window_json(product);
    r.details["l_count"] = l.size();
    r.details["op_count"] = op.size();
    return r;
}

VerificationReport verify_refined_rlhp(Int width) {
    VerificationReport r;
    r.identity = "refined-rlhp";
    r.params = {{"N", width}};
    const BiSeries product = rhs_refined_rlhp(width);
    const auto rl = enumerate_reduced_lh(width);
    const auto rop = enumerate_reduced_odd(width);
    const BiSeries rl_side = gf_of_partitions(rl, TStatistic::AltSize, product.qmax(), product.tmax());
    const BiSeries rop_side = gf_of_partitions(rop, TStatistic::Length, product.qmax(), product.tmax());
    compare_sides(r, {{"RL[t^alt]", &rl_side}, {"ROP[t^length]", &rop_side}, {"product", &product}});
    if (auto m = first_mismatch(product.at_t_one(), rhs_reduced_lhp(width)))
        r.fail("t=1 specialisation: " + m->to_string());
    r.details["window"] = window_json(product);
    r.details["series"] = product.to_string();
    return r;
}

VerificationReport verify_q_analogue(Int n, std::optional<Int> qmax_opt) {
    VerificationReport r;
    r.identity = "q-analogue-2";
    if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be >= 1");
    if (n > 8) throw Error(ErrorKind::WidthTooLarge, "q-analogue limited to n <= 8");
    const Int qmax = qmax_opt.value_or(reduced_max_size(n));
    if (qmax < 0 || qmax > kMaxEnumerationSize) throw Error(ErrorKind::GuardViolation, "qmax out of range");
    r.params = {{"n", n}, {"qmax", qmax}};

    auto quotient = [&](auto exponent) {
        BiSeries s = BiSeries::one(qmax, 0);
        for (Int k = 1; k <= n; ++k) {
            s *= finite_factor(0, exponent(k), qmax, 0);
            s *= geometric_factor(0, 2 * k - 1, qmax, 0);
        }
        return s;
    };
    BiSeries bounded = BiSeries::one(qmax, 0);
    for (Int k = 1; k <= n; ++k) {
        BiSeries factor(qmax, 0);
        for (Int i = 0; i <= n - k && i * (2 * k - 1) <= qmax; ++i) factor.add_to(0, i * (2 * k - 1), 1);
        bounded *= factor;
    }
    const auto rop = enumerate_reduced_odd(n);
    std::vector<Partition> in_window;
    std::copy_if(rop.begin(), rop.end(), std::back_inserter(in_window),
                 [&](const Partition& p) { return p.size() <= qmax; });
    const BiSeries rop_side = gf_of_partitions(in_window, TStatistic::None, qmax, 0);

    std::vector<Int> trapezoids, as_written;
    for (Int k = 1; k <= n; ++k) {
        trapezoids.push_back(trapezoid_number(n, k));
        as_written.push_back(n * (n - 1) / 2 - (k - 1) * (k - 2) / 2);
    }
    const BiSeries corrected = quotient([&](Int k) { return trapezoids[static_cast<std::size_t>(k - 1)]; });
    compare_sides(r, {{"quotient", &corrected}, {"bounded-multiplicity", &bounded}, {"ROP", &rop_side}});

    const BiSeries raw = quotient([&](Int k) { return as_written[static_cast<std::size_t>(k - 1)]; });
    const auto raw_mismatch = first_mismatch(raw, bounded);
    r.details["window"] = window_json(corrected);
    r.details["exponents"] = trapezoids;
    r.details["as_written"] = {
        {"exponents", as_written},
        {"passed", !raw_mismatch.has_value()},
        {"counterexample", raw_mismatch ? Json(raw_mismatch->to_string()) : Json(nullptr)},
    };
    r.details["series"] = bounded.to_string();
    return r;
}

VerificationReport verify_trapezoid_alt_size(Int n_max) {
    VerificationReport r;
    r.identity = "trapezoid-alt-size";
    r.params = {{"n_max", n_max}};
    Int checked = 0, equal_to_k = 0;
    for (Int n = 1; n <= n_max; ++n) {
        for (Int k = 1; k <= n; ++k) {
            const Int a = trapezoid_partition(n, k).alt_size();
            ++checked;
            if (a == k) ++equal_to_k;
            if (a != n - k + 1)
                r.fail("alt_size of [" + std::to_string(n) + "," + std::to_string(k) + "] is " + std::to_string(a));
        }
    }
    r.details["pairs_checked"] = checked;
    r.details["equals_N_minus_k_plus_1"] = r.passed;
    r.details["pairs_equal_to_k"] = equal_to_k;
    return r;
}

VerificationReport verify_lemmas(Int width, const LemmaOptions& options) {
    VerificationReport r;
    r.identity = "lemmas";
    r.params = {{"N", width}};
    if (width > 8) throw Error(ErrorKind::WidthTooLarge, "lemma suite limited to width 8");

    Int feeds_checked = 0;
    auto check_all_feeds = [&](const Partition& lambda) {
        GrowthState s = new_state(width);
        for (Int part : lambda.parts()) {
            s = feed(s, part);
            ++feeds_checked;
            if (auto bad = check_growth_identities(s)) {
                r.fail("growth identity for " + format_multiplicities(lambda) + " after part " + std::to_string(part) +
                       ": " + *bad);
                return s;
            }
            if (!is_lecture_hall(s.image, width))
                r.fail("image " + display(s.image) + " left L_N while growing " + format_multiplicities(lambda));
        }
        return s;
    };

    const auto rop = enumerate_reduced_odd(width);
    Int bound_checks = 0;
    for (const Partition& lambda : rop) {
        const GrowthState s = check_all_feeds(lambda);
        for (std::size_t j = 0; j + 1 < s.actions.size(); ++j) {
            const Int gap = s.actions[j] - s.actions[j + 1];
            ++bound_checks;
            if (gap < 0 || gap > 1)
                r.fail("d_" + std::to_string(j + 1) + " - d_" + std::to_string(j + 2) + " = " + std::to_string(gap) +
                       " for " + format_multiplicities(lambda));
        }
    }

    std::mt19937_64 rng(options.seed);
    std::vector<Partition> samples;
    samples.reserve(static_cast<std::size_t>(options.random_samples));
    for (Int j = 0; j < options.random_samples; ++j) {
        samples.push_back(random_odd_party(width, options.random_max_size, rng));
        check_all_feeds(samples.back());
    }

    // Block law over ROP_N and a slice of the random samples, for every k.
    Int block_checks = 0, restoration_checks = 0;
    auto check_block = [&](const Partition& lambda) {
        const Partition base_image = phi(width, lambda);
        for (Int k = 1; k <= width; ++k) {
            const Partition grown = with_copies(lambda, 2 * k - 1, width - k + 1);
            const Partition expected = comp_add(base_image, trapezoid_partition(width, k)).to_partition();
            ++block_checks;
            if (phi(width, grown) != expected)
                r.fail("block law fails for " + format_multiplicities(lambda) + " with k=" + std::to_string(k));

            // Appending the block after every existing part leaves the counter unchanged.
            std::vector<Int> kept;
            for (Int p : lambda.parts())
                if (p >= 2 * k - 1) kept.push_back(p);
            const Partition head(std::move(kept));
            GrowthState before = run_growth(width, head);
            GrowthState after = before;
            for (Int c = 0; c < width - k + 1; ++c) after = feed(after, 2 * k - 1);
            ++restoration_checks;
            if (after.counter != before.counter)
                r.fail("counter not restored for " + format_multiplicities(head) + " with k=" + std::to_string(k));
        }
    };
    for (const Partition& lambda : rop) check_block(lambda);
    const std::size_t block_samples = std::min<std::size_t>(samples.size(), 2000);
    for (std::size_t j = 0; j < block_samples; ++j) check_block(samples[j]);

    const VerificationReport alt = verify_trapezoid_alt_size(20);
    if (!alt.passed) r.fail(*alt.counterexample);

    r.details["rop_count"] = rop.size();
    r.details["random_samples"] = options.random_samples;
    r.details["random_max_size"] = options.random_max_size;
    r.details["seed"] = options.seed;
    r.details["feeds_checked"] = feeds_checked;
    r.details["action_gap_checks"] = bound_checks;
    r.details["block_law_checks"] = block_checks;
    r.details["counter_restoration_checks"] = restoration_checks;
    r.details["trapezoid_alt_size"] = alt.details;
    return r;
}

VerificationReport verify_bijection(Int width, Int max_size) {
    VerificationReport r;
    r.identity = "bijection";
    r.params = {{"N", width}, {"max_size", max_size}};

    const auto rop = enumerate_reduced_odd(width);
    const auto rl = enumerate_reduced_lh(width);
    std::set<Partition> rl_set(rl.begin(), rl.end());
    std::set<Partition> images;
    for (const Partition& lambda : rop) {
        const Partition mu = phi(width, lambda);
        if (mu.size() != lambda.size()) r.fail("size changed for " + format_multiplicities(lambda));
        if (mu.alt_size() != static_cast<Int>(lambda.length()))
            r.fail("alt size != length for " + format_multiplicities(lambda));
        if (!rl_set.count(mu)) r.fail("phi(" + format_multiplicities(lambda) + ") = " + display(mu) + " not in RL_N");
        if (!images.insert(mu).second) r.fail("phi not injective on ROP_N at " + display(mu));

        // Adding any block must leave the reduced set.
        for (Int k = 1; k <= width; ++k) {
            const Partition grown = with_copies(lambda, 2 * k - 1, width - k + 1);
            if (is_reduced_lh(phi(width, grown), width))
                r.fail("phi(" + format_multiplicities(grown) + ") is reduced");
        }
    }
    if (images != rl_set) r.fail("phi(ROP_N) != RL_N");

    const auto op = enumerate_op_up_to(width, max_size);
    std::set<Partition> op_images;
    for (const Partition& lambda : op) {
        const Partition mu = phi(width, lambda);
        if (!is_lecture_hall(mu, width)) r.fail("phi(" + format_multiplicities(lambda) + ") not in L_N");
        if (mu.size() != lambda.size()) r.fail("size changed for " + format_multiplicities(lambda));
        if (mu.alt_size() != static_cast<Int>(lambda.length()))
            r.fail("alt size != length for " + format_multiplicities(lambda));
        if (is_reduced_lh(mu, width) != is_reduced_odd(lambda, width))
            r.fail("reduced-ness not preserved for " + format_multiplicities(lambda));
        if (!op_images.insert(mu).second) r.fail("phi not injective on OP_N at " + display(mu));
        if (phi_inverse(width, mu) != lambda) r.fail("phi_inverse(phi(" + format_multiplicities(lambda) + ")) differs");

        const ReductionResult odd = reduce_odd(width, lambda);
        Partition rebuilt = odd.reduced;
        for (Int k = 1; k <= width; ++k)
            rebuilt = with_copies(rebuilt, 2 * k - 1, odd.counts[static_cast<std::size_t>(k - 1)] * (width - k + 1));
        if (rebuilt != lambda || !is_reduced_odd(odd.reduced, width))
            r.fail("reduce_odd does not reconstruct " + format_multiplicities(lambda));
    }

    const auto l = enumerate_lh_up_to(width, max_size);
    for (const Partition& mu : l) {
        const Partition lambda = phi_inverse(width, mu);
        if (phi(width, lambda) != mu) r.fail("phi(phi_inverse(" + display(mu) + ")) differs");

        const ReductionResult red = reduce_lh(width, mu);
        if (red.reduced != reduce_lh(width, mu, StaircaseOrder::LargestFirst).reduced)
            r.fail("reduction order changes the result for " + display(mu));
        if (!is_reduced_lh(red.reduced, width)) r.fail("reduce_lh(" + display(mu) + ") not reduced");
        IncrementVector rebuilt(red.reduced);
        for (Int k = 1; k <= width; ++k)
            for (Int c = 0; c < red.counts[static_cast<std::size_t>(k - 1)]; ++c)
                rebuilt = comp_add(rebuilt, trapezoid_partition(width, k));
        if (rebuilt.to_partition() != mu) r.fail("reduce_lh does not reconstruct " + display(mu));
    }
    if (op.size() != l.size())
        r.fail("|OP_N| = " + std::to_string(op.size()) + " but |L_N| = " + std::to_string(l.size()) + " up to size " +
               std::to_string(max_size));

    r.details["rop_count"] = rop.size();
    r.details["rl_count"] = rl.size();
    r.details["op_count"] = op.size();
    r.details["l_count"] = l.size();
    return r;
}

VerificationReport verify(const VerifyRequest& q) {
    const std::string& id = q.identity;
    if (id == "thm2.1") return factorial_identity_check(q.parameter);
    if (id == "skip") return skip_permutation_check(q.parameter);
    if (id == "rlhp") return verify_rlhp(q.parameter);
    if (id == "lhp") return verify_lhp(q.parameter, q.qmax.value_or(40));
    if (id == "refined-lhp") return verify_refined_lhp(q.parameter, q.qmax.value_or(40));
    if (id == "refined-rlhp") return verify_refined_rlhp(q.parameter);
    if (id == "q-analogue-2") return verify_q_analogue(q.parameter, q.qmax);
    if (id == "lemmas") return verify_lemmas(q.parameter);
    if (id == "bijection") return verify_bijection(q.parameter, q.qmax.value_or(40));
    throw Error(ErrorKind::UnknownIdentity, "'" + id + "'");
}

std::vector<VerificationReport> verify_all(const std::vector<VerifyRequest>& requests, unsigned threads) {
    std::vector<std::optional<VerificationReport>> slots(requests.size());
    std::vector<std::exception_ptr> errors(requests.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < requests.size(); j = next++) {
            try {
                slots[j] = verify(requests[j]);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(requests.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<VerificationReport> out;
    out.reserve(requests.size());
    for (std::size_t j = 0; j < requests.size(); ++j) {
        if (errors[j]) std::rethrow_exception(errors[j]);
        out.push_back(std::move(*slots[j]));
    }
    return out;
}

}  // namespace hallforge
