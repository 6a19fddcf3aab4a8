#include "hallforge/bijection.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "hallforge/partition_sets.hpp"
#include "hallforge/trapezoid.hpp"

namespace hallforge {

GrowthState new_state(Int width) {
    if (width < 1) throw Error(ErrorKind::OutOfRange, "width must be >= 1");
    GrowthState s;
    s.width = width;
    s.counter.assign(static_cast<std::size_t>(width), 0);
    s.actions.assign(static_cast<std::size_t>(width), 0);
    return s;
}

GrowthState feed(const GrowthState& state, Int part) {
    const Int n = state.width;
    if (part % 2 == 0) throw Error(ErrorKind::EvenPart, "part " + std::to_string(part) + " is even");
    if (part < 1) throw Error(ErrorKind::OutOfRange, "part " + std::to_string(part) + " is not positive");
    if (part > 2 * n - 1)
        throw Error(ErrorKind::PartTooLarge,
                    "part " + std::to_string(part) + " exceeds 2N-1 = " + std::to_string(2 * n - 1));
    if (state.last_part && part > *state.last_part)
        throw Error(ErrorKind::OrderViolation,
                    "part " + std::to_string(part) + " fed after smaller part " + std::to_string(*state.last_part));

    const Int k = (part + 1) / 2;
    auto zero = std::find(state.counter.begin(), state.counter.end(), 0);
    if (zero == state.counter.end())
        throw Error(ErrorKind::CounterUnderflow, "internal: counter has no zero entry");
    const auto row_index = static_cast<std::size_t>(zero - state.counter.begin());
    const Int row = static_cast<Int>(row_index) + 1;
    const Int reset = n - k - row + 1;
    if (reset < 0)
        throw Error(ErrorKind::CounterUnderflow,
                    "internal: counter reset N-k-i+1 = " + std::to_string(reset) + " at i=" + std::to_string(row));

    GrowthState next = state;
    next.image = comp_add(state.image, increment(row, k));
    for (std::size_t j = 0; j < row_index; ++j) --next.counter[j];
    next.counter[row_index] = reset;
    ++next.actions[row_index];
    next.last_part = part;

    // 0 <= I_j <= N-j and I_N = 0.
    for (std::size_t j = 0; j < next.counter.size(); ++j) {
        if (next.counter[j] < 0 || next.counter[j] > n - static_cast<Int>(j) - 1)
            throw Error(ErrorKind::CounterUnderflow,
                        "internal: counter entry I_" + std::to_string(j + 1) + " = " + std::to_string(next.counter[j]) +
                            " out of [0, " + std::to_string(n - static_cast<Int>(j) - 1) + "]");
    }
    return next;
}

std::optional<std::string> check_growth_identities(const GrowthState& state) {
    const Int n = state.width;
    const Int k = state.last_part ? (*state.last_part + 1) / 2 : n + 1;
    for (Int j = 1; j <= n; ++j) {
        const Int d = state.actions[static_cast<std::size_t>(j - 1)];
        const Int i = state.counter[static_cast<std::size_t>(j - 1)];
        if (j <= k) {
            const Int modulus = n - 2 * j + 2;
            const Int odd = state.image.at(static_cast<std::size_t>(2 * j - 2));
            if (odd != modulus * d - i)
                return "mu_" + std::to_string(2 * j - 1) + " = " + std::to_string(odd) + " but (N-2j+2)d_j - I_j = " +
                       std::to_string(modulus * d - i) + " (j=" + std::to_string(j) + ")";
            if (modulus > 0 && ((odd + i) % modulus) != 0)
                return "mu_" + std::to_string(2 * j - 1) + " not congruent to -I_j mod " + std::to_string(modulus);
        }
        if (j < k) {
            const Int modulus = n - 2 * j + 1;
            const Int even = state.image.at(static_cast<std::size_t>(2 * j - 1));
            if (even != modulus * d - i)
                return "mu_" + std::to_string(2 * j) + " = " + std::to_string(even) + " but (N-2j+1)d_j - I_j = " +
                       std::to_string(modulus * d - i) + " (j=" + std::to_string(j) + ")";
            if (modulus > 0 && ((even + i) % modulus) != 0)
                return "mu_" + std::to_string(2 * j) + " not congruent to -I_j mod " + std::to_string(modulus);
        }
    }
    return std::nullopt;
}

namespace {

void require_odd_party(Int width, const Partition& lambda) {
    if (!is_odd_party(lambda, width))
        throw Error(ErrorKind::NotOddParty, display(lambda) + " is not in OP_" + std::to_string(width));
}

void require_lecture_hall(Int width, const Partition& mu) {
    if (!is_lecture_hall(mu, width))
        throw Error(ErrorKind::NotLectureHall, display(mu) + " is not in L_" + std::to_string(width));
}

}  // namespace

GrowthState run_growth(Int width, const Partition& lambda) {
    require_odd_party(width, lambda);
    GrowthState s = new_state(width);
    for (Int part : lambda.parts()) s = feed(s, part);
    return s;
}

Partition phi(Int width, const Partition& lambda) { return run_growth(width, lambda).image.to_partition(); }

std::vector<TraceStep> trace(Int width, const Partition& lambda) {
    require_odd_party(width, lambda);
    std::vector<TraceStep> steps;
    GrowthState s = new_state(width);
    for (Int part : lambda.parts()) {
        const auto row = static_cast<Int>(std::find(s.counter.begin(), s.counter.end(), 0) - s.counter.begin()) + 1;
        s = feed(s, part);
        TraceStep step;
        step.part = part;
        step.k = (part + 1) / 2;
        step.row = row;
        step.increment = increment(row, step.k);
        step.counter = s.counter;
        step.actions = s.actions;
        step.image = s.image.to_partition();
        steps.push_back(std::move(step));
    }
    return steps;
}

ReductionResult reduce_odd(Int width, const Partition& lambda) {
    require_odd_party(width, lambda);
    std::map<Int, Int> m = lambda.multiplicities();
    ReductionResult r;
    r.counts.assign(static_cast<std::size_t>(width), 0);
    for (Int k = 1; k <= width; ++k) {
        auto it = m.find(2 * k - 1);
        if (it == m.end()) continue;
        const Int block = width - k + 1;
        r.counts[static_cast<std::size_t>(k - 1)] = it->second / block;
        it->second %= block;
    }
    r.reduced = Partition::from_multiplicities(m);
    return r;
}

ReductionResult reduce_lh(Int width, const Partition& mu, StaircaseOrder order) {
    require_lecture_hall(width, mu);
    ReductionResult r;
    r.counts.assign(static_cast<std::size_t>(width), 0);
    std::vector<Int> cur = mu.parts();

    // (mu_j - (N-j+1)) / (N-j+1) >= mu_{j+1} / (N-j), cross multiplied.
    auto admits = [&](std::size_t j) {
        const Int jj = static_cast<Int>(j);
        const Int next = j < cur.size() ? cur[j] : 0;
        return checked_mul(cur[j - 1] - (width - jj + 1), width - jj) >= checked_mul(next, width - jj + 1);
    };

    for (;;) {
        std::optional<std::size_t> pick;
        for (std::size_t j = 1; j <= cur.size(); ++j) {
            if (!admits(j)) continue;
            pick = j;
            if (order == StaircaseOrder::SmallestFirst) break;
        }
        if (!pick) break;
        const std::size_t j = *pick;
        for (std::size_t p = 0; p < j; ++p) cur[p] -= width - static_cast<Int>(p);
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        const Int jj = static_cast<Int>(j);
        const Int k = (jj % 2 == 1) ? (jj + 1) / 2 : width + 1 - jj / 2;
        ++r.counts[static_cast<std::size_t>(k - 1)];
    }
    r.reduced = Partition(std::move(cur));
    return r;
}

namespace {

struct PartsHash {
    std::size_t operator()(const std::vector<Int>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using InverseTable = std::unordered_map<std::vector<Int>, Partition, PartsHash>;

// Built at most once per width and then only read.
const InverseTable& inverse_table(Int width) {
    static std::array<std::once_flag, kMaxInverseWidth + 1> once;
    static std::array<std::unique_ptr<const InverseTable>, kMaxInverseWidth + 1> tables;
    const auto slot = static_cast<std::size_t>(width);
    std::call_once(once[slot], [&] {
        auto table = std::make_unique<InverseTable>();
        for (const Partition& lambda : enumerate_reduced_odd(width)) {
            auto image = phi(width, lambda);
            table->emplace(image.parts(), lambda);
        }
        tables[slot] = std::move(table);
    });
    return *tables[slot];
}

}  // namespace

Partition phi_inverse(Int width, const Partition& mu) {
    if (width < 1) throw Error(ErrorKind::OutOfRange, "width must be >= 1");
    if (width > kMaxInverseWidth)
        throw Error(ErrorKind::WidthTooLarge,
                    "inverse table limited to width " + std::to_string(kMaxInverseWidth));
    require_lecture_hall(width, mu);
    const ReductionResult red = reduce_lh(width, mu);
    const InverseTable& table = inverse_table(width);
    auto it = table.find(red.reduced.parts());
    if (it == table.end())
        throw Error(ErrorKind::TableMiss, "internal: reduced " + display(red.reduced) + " has no preimage in ROP_" +
                                              std::to_string(width));
    std::map<Int, Int> m = it->second.multiplicities();
    for (Int k = 1; k <= width; ++k) {
        const Int c = red.counts[static_cast<std::size_t>(k - 1)];
        if (c) m[2 * k - 1] = checked_add(m[2 * k - 1], checked_mul(c, width - k + 1));
    }
    return Partition::from_multiplicities(m);
}

}  // namespace hallforge
