#include "hallforge/partition_sets.hpp"

#include <algorithm>
#include <string>

namespace hallforge {

Family parse_family(std::string_view name) {
    if (name == "l") return Family::LectureHall;
    if (name == "rl") return Family::ReducedLectureHall;
    if (name == "op") return Family::OddParty;
    if (name == "rop") return Family::ReducedOddParty;
    throw Error(ErrorKind::GuardViolation, "unknown set '" + std::string(name) + "'");
}

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::LectureHall: return "l";
    case Family::ReducedLectureHall: return "rl";
    case Family::OddParty: return "op";
    case Family::ReducedOddParty: return "rop";
    }
    return "?";
}

namespace {

void require_width(Int width) {
    if (width < 1) throw Error(ErrorKind::OutOfRange, "width must be >= 1, got " + std::to_string(width));
}

void require_enumerable(Int width) {
    require_width(width);
    if (width > kMaxEnumerationWidth)
        throw Error(ErrorKind::WidthTooLarge,
                    "width " + std::to_string(width) + " exceeds " + std::to_string(kMaxEnumerationWidth));
}

void require_size_budget(Int max_size) {
    if (max_size < 0 || max_size > kMaxEnumerationSize)
        throw Error(ErrorKind::GuardViolation,
                    "max size must lie in [0, " + std::to_string(kMaxEnumerationSize) + "], got " + std::to_string(max_size));
}

// mu_j / (N-j+1) >= mu_{j+1} / (N-j), positions 1-based.
bool chain_holds(Int upper, Int lower, Int width, std::size_t j) {
    const Int jj = static_cast<Int>(j);
    return checked_mul(upper, width - jj) >= checked_mul(lower, width - jj + 1);
}

}  // namespace

bool is_lecture_hall(const IncrementVector& mu, Int width) {
    require_width(width);
    std::size_t len = mu.entries.size();
    while (len > 0 && mu.entries[len - 1] == 0) --len;
    if (static_cast<Int>(len) > width) return false;
    for (std::size_t j = 0; j < len; ++j)
        if (mu.entries[j] <= 0) return false;
    for (std::size_t j = 1; j < len; ++j)
        if (!chain_holds(mu.entries[j - 1], mu.entries[j], width, j)) return false;
    return true;
}

bool is_reduced_lh(const Partition& mu, Int width) {
    if (!is_lecture_hall(mu, width))
        throw Error(ErrorKind::NotLectureHall, display(mu) + " is not in L_" + std::to_string(width));
    IncrementVector probe(mu);
    for (std::size_t i = 0; i < probe.entries.size(); ++i) {
        const Int original = probe.entries[i];
        probe.entries[i] = original - (width - static_cast<Int>(i));
        const bool still_hall = is_lecture_hall(probe, width);
        probe.entries[i] = original;
        if (still_hall) return false;
    }
    return true;
}

bool is_odd_party(const Partition& lambda, Int width) {
    require_width(width);
    for (Int p : lambda.parts())
        if (p % 2 == 0 || p > 2 * width - 1) return false;
    return true;
}

bool is_reduced_odd(const Partition& lambda, Int width) {
    if (!is_odd_party(lambda, width)) return false;
    for (auto [part, count] : lambda.multiplicities()) {
        const Int k = (part + 1) / 2;
        if (count > width - k) return false;
    }
    return true;
}

Int reduced_max_size(Int width) {
    Int total = 0;
    for (Int k = 1; k <= width; ++k) total = checked_add(total, checked_mul(2 * k - 1, width - k));
    return total;
}

std::vector<Partition> enumerate_reduced_lh(Int width) {
    require_enumerable(width);
    // Tails are stored as raw part vectors; RL_0 = {()}.
    std::vector<std::vector<Int>> level{{}};
    for (Int n = 1; n <= width; ++n) {
        std::vector<std::vector<Int>> next;
        next.reserve(level.size() * static_cast<std::size_t>(n));
        for (const auto& tail : level) {
            // Least head making (head, tail) a width-n hall sequence; 0 means no new part.
            const Int least = tail.empty() ? 0 : (tail.front() * n + (n - 2)) / (n - 1);
            for (Int head = least; head < least + n; ++head) {
                if (head == 0) {
                    next.emplace_back();
                    continue;
                }
                std::vector<Int> parts;
                parts.reserve(tail.size() + 1);
                parts.push_back(head);
                parts.insert(parts.end(), tail.begin(), tail.end());
                next.push_back(std::move(parts));
            }
        }
        level = std::move(next);
    }
    std::vector<Partition> out;
    out.reserve(level.size());
    for (auto& parts : level) out.emplace_back(std::move(parts));
    sort_canonical(out);
    return out;
}

std::vector<Partition> enumerate_reduced_odd(Int width) {
    require_enumerable(width);
    std::vector<Partition> out;
    std::map<Int, Int> m;
    auto rec = [&](auto& self, Int k) -> void {
        if (k > width) {
            out.push_back(Partition::from_multiplicities(m));
            return;
        }
        for (Int count = 0; count <= width - k; ++count) {
            m[2 * k - 1] = count;
            self(self, k + 1);
        }
    };
    rec(rec, 1);
    sort_canonical(out);
    return out;
}

std::vector<Partition> enumerate_lh_up_to(Int width, Int max_size) {
    require_enumerable(width);
    require_size_budget(max_size);
    std::vector<Partition> out;
    std::vector<Int> prefix;
    auto rec = [&](auto& self, Int budget) -> void {
        out.emplace_back(prefix);
        const auto j = static_cast<Int>(prefix.size());
        if (j == width) return;
        // Next part p at position j+1 needs prev*(N-j) >= p*(N-j+1).
        Int limit = budget;
        if (j > 0) limit = std::min(limit, prefix.back() * (width - j) / (width - j + 1));
        for (Int p = 1; p <= limit; ++p) {
            prefix.push_back(p);
            self(self, budget - p);
            prefix.pop_back();
        }
    };
    rec(rec, max_size);
    sort_canonical(out);
    return out;
}

std::vector<Partition> enumerate_op_up_to(Int width, Int max_size) {
    require_enumerable(width);
    require_size_budget(max_size);
    std::vector<Partition> out;
    std::vector<Int> prefix;
    auto rec = [&](auto& self, Int largest, Int budget) -> void {
        out.emplace_back(prefix);
        for (Int p = 1; p <= std::min(largest, budget); p += 2) {
            prefix.push_back(p);
            self(self, p, budget - p);
            prefix.pop_back();
        }
    };
    rec(rec, 2 * width - 1, max_size);
    sort_canonical(out);
    return out;
}

}  // namespace hallforge
