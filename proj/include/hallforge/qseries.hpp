#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hallforge/partition.hpp"
#include "hallforge/report.hpp"

namespace hallforge {

/// Truncated bivariate series sum c(a,b) t^a q^b with 0 <= a <= tmax and
/// 0 <= b <= qmax. Coefficients are exact checked 64-bit integers; every
/// product is correct on the retained window.
class BiSeries {
public:
    BiSeries(Int qmax, Int tmax);

    static BiSeries zero(Int qmax, Int tmax) { return BiSeries(qmax, tmax); }
    static BiSeries one(Int qmax, Int tmax);
    /// c t^a q^b, or zero if (a,b) falls outside the window.
    static BiSeries monomial(Int a, Int b, Int c, Int qmax, Int tmax);

    Int qmax() const noexcept { return qmax_; }
    Int tmax() const noexcept { return tmax_; }

    Int coeff(Int a, Int b) const;
    void add_to(Int a, Int b, Int value);

    BiSeries& operator+=(const BiSeries& other);
    BiSeries& operator-=(const BiSeries& other);
    BiSeries& operator*=(const BiSeries& other);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    bool operator==(const BiSeries&) const = default;

    /// Sets t = 1, collapsing to a tmax = 0 series.
    BiSeries at_t_one() const;
    /// Sum of all coefficients in the window.
    Int coefficient_sum() const;
    bool is_zero() const;

    /// "1 + q + 2q^2 + t q^3" style, terms ordered by q then t.
    std::string to_string() const;

private:
    std::size_t index(Int a, Int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(qmax_ + 1) + static_cast<std::size_t>(b);
    }
    void require_same_window(const BiSeries& other) const;

    Int qmax_;
    Int tmax_;
    std::vector<Int> coeffs_;
};

/// 1/(1 - t^a q^b) expanded in the window; b must be positive.
BiSeries geometric_factor(Int a_t, Int b_q, Int qmax, Int tmax);
/// 1 - t^a q^b.
BiSeries finite_factor(Int a_t, Int b_q, Int qmax, Int tmax);

enum class TStatistic { None, Length, AltSize };

/// sum over items of t^{stat} q^{size}. Throws WindowOverflow naming the
/// first partition that does not fit.
BiSeries gf_of_partitions(std::span<const Partition> items, TStatistic stat, Int qmax, Int tmax);

/// prod_k (1 - q^{trap(N,k)}) / (1 - q^{2k-1}) at its exact degree.
BiSeries rhs_reduced_lhp(Int width);
/// prod_k 1/(1 - q^{2k-1}) up to q^qmax.
BiSeries rhs_lhp(Int width, Int qmax);
/// prod_k 1/(1 - t q^{2k-1}).
BiSeries rhs_refined_lhp(Int width, Int qmax, Int tmax);
/// prod_k (1 - t^{N-k+1} q^{trap(N,k)}) / (1 - t q^{2k-1}) at its exact bidegree.
BiSeries rhs_refined_rlhp(Int width);

/// Exact t-degree of rhs_refined_rlhp: sum_k (N-k).
Int reduced_max_alt_size(Int width);

/// First coefficient (a,b) where the two series differ, if any.
struct Mismatch {
    Int t_degree;
    Int q_degree;
    Int left;
    Int right;
    std::string to_string() const;
};
std::optional<Mismatch> first_mismatch(const BiSeries& left, const BiSeries& right);

Json to_json(const BiSeries& s);

}  // namespace hallforge
