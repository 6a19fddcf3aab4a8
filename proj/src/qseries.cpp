#include "hallforge/qseries.hpp"

#include <sstream>

#include "hallforge/partition_sets.hpp"
#include "hallforge/trapezoid.hpp"

namespace hallforge {

BiSeries::BiSeries(Int qmax, Int tmax) : qmax_(qmax), tmax_(tmax) {
    if (qmax < 0 || tmax < 0) throw Error(ErrorKind::GuardViolation, "series window must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>((qmax + 1) * (tmax + 1)), 0);
}

BiSeries BiSeries::one(Int qmax, Int tmax) { return monomial(0, 0, 1, qmax, tmax); }

BiSeries BiSeries::monomial(Int a, Int b, Int c, Int qmax, Int tmax) {
    BiSeries s(qmax, tmax);
    if (a >= 0 && b >= 0 && a <= tmax && b <= qmax) s.coeffs_[s.index(a, b)] = c;
    return s;
}

Int BiSeries::coeff(Int a, Int b) const {
    if (a < 0 || b < 0 || a > tmax_ || b > qmax_) return 0;
    return coeffs_[index(a, b)];
}

void BiSeries::add_to(Int a, Int b, Int value) {
    if (a < 0 || b < 0 || a > tmax_ || b > qmax_)
        throw Error(ErrorKind::WindowOverflow, "term t^" + std::to_string(a) + " q^" + std::to_string(b) +
                                                   " outside window t<=" + std::to_string(tmax_) +
                                                   " q<=" + std::to_string(qmax_));
    auto& c = coeffs_[index(a, b)];
    c = checked_add(c, value);
}

void BiSeries::require_same_window(const BiSeries& other) const {
    if (qmax_ != other.qmax_ || tmax_ != other.tmax_)
        throw Error(ErrorKind::WindowMismatch, "windows (q<=" + std::to_string(qmax_) + ", t<=" +
                                                   std::to_string(tmax_) + ") and (q<=" + std::to_string(other.qmax_) +
                                                   ", t<=" + std::to_string(other.tmax_) + ")");
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
    require_same_window(other);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_add(coeffs_[j], other.coeffs_[j]);
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
    require_same_window(other);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_sub(coeffs_[j], other.coeffs_[j]);
    return *this;
}

BiSeries operator*(const BiSeries& x, const BiSeries& y) {
    x.require_same_window(y);
    BiSeries out(x.qmax_, x.tmax_);
    for (Int a1 = 0; a1 <= x.tmax_; ++a1) {
        for (Int b1 = 0; b1 <= x.qmax_; ++b1) {
            const Int c1 = x.coeffs_[x.index(a1, b1)];
            if (c1 == 0) continue;
            for (Int a2 = 0; a1 + a2 <= x.tmax_; ++a2) {
                for (Int b2 = 0; b1 + b2 <= x.qmax_; ++b2) {
                    const Int c2 = y.coeffs_[y.index(a2, b2)];
                    if (c2 == 0) continue;
                    auto& target = out.coeffs_[out.index(a1 + a2, b1 + b2)];
                    target = checked_add(target, checked_mul(c1, c2));
                }
            }
        }
    }
    return out;
}

BiSeries& BiSeries::operator*=(const BiSeries& other) { return *this = *this * other; }

BiSeries BiSeries::at_t_one() const {
    BiSeries out(qmax_, 0);
    for (Int a = 0; a <= tmax_; ++a)
        for (Int b = 0; b <= qmax_; ++b) out.add_to(0, b, coeffs_[index(a, b)]);
    return out;
}

Int BiSeries::coefficient_sum() const {
    Int s = 0;
    for (Int c : coeffs_) s = checked_add(s, c);
    return s;
}

bool BiSeries::is_zero() const {
    for (Int c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::string BiSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (Int b = 0; b <= qmax_; ++b) {
        for (Int a = 0; a <= tmax_; ++a) {
            Int c = coeffs_[index(a, b)];
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            const Int mag = c < 0 ? -c : c;
            const bool bare = a == 0 && b == 0;
            if (mag != 1 || bare) out << mag;
            if (a > 0) out << 't' << (a > 1 ? "^" + std::to_string(a) : "");
            if (a > 0 && b > 0) out << ' ';
            if (b > 0) out << 'q' << (b > 1 ? "^" + std::to_string(b) : "");
        }
    }
    return first ? "0" : out.str();
}

BiSeries geometric_factor(Int a_t, Int b_q, Int qmax, Int tmax) {
    if (b_q == 0) throw Error(ErrorKind::DivergentFactor, "1/(1 - t^a q^0) has no q-adic expansion");
    if (b_q < 0 || a_t < 0) throw Error(ErrorKind::GuardViolation, "exponents must be nonnegative");
    BiSeries s(qmax, tmax);
    for (Int j = 0; j * b_q <= qmax && j * a_t <= tmax; ++j) s.add_to(j * a_t, j * b_q, 1);
    return s;
}

BiSeries finite_factor(Int a_t, Int b_q, Int qmax, Int tmax) {
    if (b_q < 0 || a_t < 0) throw Error(ErrorKind::GuardViolation, "exponents must be nonnegative");
    return BiSeries::one(qmax, tmax) - BiSeries::monomial(a_t, b_q, 1, qmax, tmax);
}

BiSeries gf_of_partitions(std::span<const Partition> items, TStatistic stat, Int qmax, Int tmax) {
    BiSeries s(qmax, tmax);
    for (const Partition& p : items) {
        Int a = 0;
        if (stat == TStatistic::Length) a = static_cast<Int>(p.length());
        if (stat == TStatistic::AltSize) a = p.alt_size();
        if (a < 0 || a > tmax || p.size() > qmax)
            throw Error(ErrorKind::WindowOverflow, display(p) + " falls outside window t<=" + std::to_string(tmax) +
                                                       " q<=" + std::to_string(qmax));
        s.add_to(a, p.size(), 1);
    }
    return s;
}

namespace {

constexpr Int kMaxProductWidth = 8;

void require_product_width(Int width) {
    if (width < 1) throw Error(ErrorKind::OutOfRange, "width must be >= 1");
    if (width > kMaxProductWidth)
        throw Error(ErrorKind::WidthTooLarge, "product side limited to width " + std::to_string(kMaxProductWidth));
}

}  // namespace

Int reduced_max_alt_size(Int width) {
    Int total = 0;
    for (Int k = 1; k <= width; ++k) total += width - k;
    return total;
}

BiSeries rhs_reduced_lhp(Int width) {
    require_product_width(width);
    const Int qmax = reduced_max_size(width);
    BiSeries s = BiSeries::one(qmax, 0);
    for (Int k = 1; k <= width; ++k) {
        s *= finite_factor(0, trapezoid_number(width, k), qmax, 0);
        s *= geometric_factor(0, 2 * k - 1, qmax, 0);
    }
    return s;
}

BiSeries rhs_lhp(Int width, Int qmax) {
    require_product_width(width);
    BiSeries s = BiSeries::one(qmax, 0);
    for (Int k = 1; k <= width; ++k) s *= geometric_factor(0, 2 * k - 1, qmax, 0);
    return s;
}

BiSeries rhs_refined_lhp(Int width, Int qmax, Int tmax) {
    require_product_width(width);
    BiSeries s = BiSeries::one(qmax, tmax);
    for (Int k = 1; k <= width; ++k) s *= geometric_factor(1, 2 * k - 1, qmax, tmax);
    return s;
}

BiSeries rhs_refined_rlhp(Int width) {
    require_product_width(width);
    const Int qmax = reduced_max_size(width);
    const Int tmax = reduced_max_alt_size(width);
    BiSeries s = BiSeries::one(qmax, tmax);
    for (Int k = 1; k <= width; ++k) {
        s *= finite_factor(width - k + 1, trapezoid_number(width, k), qmax, tmax);
        s *= geometric_factor(1, 2 * k - 1, qmax, tmax);
    }
    return s;
}

std::string Mismatch::to_string() const {
    return "coefficient of t^" + std::to_string(t_degree) + " q^" + std::to_string(q_degree) + ": " +
           std::to_string(left) + " vs " + std::to_string(right);
}

std::optional<Mismatch> first_mismatch(const BiSeries& left, const BiSeries& right) {
    if (left.qmax() != right.qmax() || left.tmax() != right.tmax())
        throw Error(ErrorKind::WindowMismatch, "cannot compare series over different windows");
    for (Int b = 0; b <= left.qmax(); ++b)
        for (Int a = 0; a <= left.tmax(); ++a)
            if (left.coeff(a, b) != right.coeff(a, b)) return Mismatch{a, b, left.coeff(a, b), right.coeff(a, b)};
    return std::nullopt;
}

Json to_json(const BiSeries& s) {
    Json j;
    j["qmax"] = s.qmax();
    j["tmax"] = s.tmax();
    Json rows = Json::array();
    for (Int a = 0; a <= s.tmax(); ++a) {
        std::vector<Int> row;
        for (Int b = 0; b <= s.qmax(); ++b) row.push_back(s.coeff(a, b));
        rows.push_back(row);
    }
    j["coefficients"] = rows;
    return j;
}

}  // namespace hallforge
