#include "hallforge/trapezoid.hpp"

#include <algorithm>

namespace hallforge {

Int trapezoid_number(Int width, Int k) {
    if (k < 1 || k > width)
        throw Error(ErrorKind::OutOfRange,
                    "trapezoid_number needs 1 <= k <= N, got N=" + std::to_string(width) + " k=" + std::to_string(k));
    return checked_mul(2 * k - 1, width - k + 1);
}

Partition trapezoid_partition(Int width, Int k) {
    if (width < 0 || k < 1)
        throw Error(ErrorKind::OutOfRange,
                    "trapezoid_partition needs N >= 0, k >= 1, got N=" + std::to_string(width) + " k=" + std::to_string(k));
    const Int last = (2 * k <= width) ? width - 2 * k + 2 : 2 * k - width - 1;
    std::vector<Int> run;
    for (Int v = width; v >= last && v > 0; --v) run.push_back(v);
    return Partition(std::move(run));
}

IncrementVector increment(Int i, Int k) {
    if (i < 1 || k < 1)
        throw Error(ErrorKind::OutOfRange, "increment needs i >= 1, k >= 1");
    return comp_sub(trapezoid_partition(k + i - 1, k), trapezoid_partition(k + i - 2, k));
}

Int triangular_difference(Int n, Int k) {
    if (k < 1 || k > n)
        throw Error(ErrorKind::OutOfRange,
                    "triangular_difference needs 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    return checked_sub(checked_mul(n, n + 1) / 2, checked_mul(k, k - 1) / 2);
}

VerificationReport skip_permutation_check(Int n) {
    VerificationReport r;
    r.identity = "skip";
    r.params = {{"n", n}};
    if (n < 1) throw Error(ErrorKind::OutOfRange, "skip_permutation_check needs n >= 1");

    std::vector<Int> triangular, trapezoidal;
    for (Int k = 1; k <= n; ++k) {
        triangular.push_back(triangular_difference(n, k));
        trapezoidal.push_back(trapezoid_number(n, k));
    }
    r.details["triangular_differences"] = triangular;
    r.details["trapezoid_numbers"] = trapezoidal;

    std::sort(triangular.begin(), triangular.end());
    std::sort(trapezoidal.begin(), trapezoidal.end());
    r.details["multiset"] = trapezoidal;
    if (triangular != trapezoidal) {
        auto [a, b] = std::mismatch(triangular.begin(), triangular.end(), trapezoidal.begin());
        r.fail("sorted multisets differ: triangular " + std::to_string(*a) + " vs trapezoid " + std::to_string(*b));
    }
    return r;
}

VerificationReport factorial_identity_check(Int n) {
    VerificationReport r;
    r.identity = "thm2.1";
    r.params = {{"n", n}};
    if (n < 1) throw Error(ErrorKind::OutOfRange, "factorial_identity_check needs n >= 1");

    try {
        std::vector<Int> pool;
        for (Int k = 1; k <= n; ++k) pool.push_back(triangular_difference(n, k));

        // Reorder the numerators so that position k holds trapezoid_number(n, k);
        // each quotient by 2k-1 is then an integer.
        std::vector<Int> skip_order;
        Int product = 1;
        for (Int k = 1; k <= n; ++k) {
            const Int wanted = trapezoid_number(n, k);
            auto it = std::find(pool.begin(), pool.end(), wanted);
            if (it == pool.end()) {
                r.fail("no numerator equal to trapezoid number " + std::to_string(wanted) + " at k=" + std::to_string(k));
                return r;
            }
            pool.erase(it);
            skip_order.push_back(wanted);
            if (wanted % (2 * k - 1) != 0) {
                r.fail(std::to_string(wanted) + " not divisible by " + std::to_string(2 * k - 1));
                return r;
            }
            product = checked_mul(product, wanted / (2 * k - 1));
        }

        Int factorial = 1;
        for (Int j = 2; j <= n; ++j) factorial = checked_mul(factorial, j);

        r.details["skip_order"] = skip_order;
        r.details["value"] = product;
        r.details["factorial"] = factorial;
        if (product != factorial)
            r.fail("product " + std::to_string(product) + " != n! " + std::to_string(factorial));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
        r.details["overflow"] = true;
        r.fail(std::string("overflow: ") + e.what());
    }
    return r;
}

}  // namespace hallforge
