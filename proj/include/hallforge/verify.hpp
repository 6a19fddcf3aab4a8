#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hallforge/report.hpp"

namespace hallforge {

/// Identity names accepted by verify(), in CLI order.
const std::vector<std::string>& identity_names();

/// Both sides of sum_{RL_N} q^|mu| = sum_{ROP_N} q^|lambda| = prod (1-q^trap)/(1-q^{2k-1}),
/// compared at the exact polynomial degree.
VerificationReport verify_rlhp(Int width);

/// L_N, OP_N and prod 1/(1-q^{2k-1}) up to q^qmax.
VerificationReport verify_lhp(Int width, Int qmax);

/// t^{alt size} on L_N, t^{length} on OP_N, prod 1/(1-t q^{2k-1}); tmax = qmax.
VerificationReport verify_refined_lhp(Int width, Int qmax);

/// Refined reduced identity at its exact bidegree.
VerificationReport verify_refined_rlhp(Int width);

/// prod_k (1 - q^{e_k})/(1 - q^{2k-1}) = prod_k sum_{i<=n-k} q^{i(2k-1)} with
/// e_k the trapezoid numbers. The variant with e_k = C(n,2) - C(k-1,2) is
/// evaluated as well and its outcome stored under details["as_written"].
VerificationReport verify_q_analogue(Int n, std::optional<Int> qmax);

struct LemmaOptions {
    Int random_samples = 10000;
    Int random_max_size = 60;
    std::uint64_t seed = 20240601;
};

/// Growth identities on every feed, the d_j - d_{j+1} bound on ROP_N, the
/// block law with counter restoration, and the alternating size of
/// trapezoids.
VerificationReport verify_lemmas(Int width, const LemmaOptions& options = {});

/// phi as a bijection ROP_N -> RL_N, reduced-ness preserved both ways,
/// reductions reconstruct their input, and phi/phi_inverse roundtrip on
/// OP_N and L_N truncated at max_size.
VerificationReport verify_bijection(Int width, Int max_size);

/// alt_size of the trapezoid partition [N,k] against N-k+1 and against k,
/// for all 1 <= k <= N <= n_max.
VerificationReport verify_trapezoid_alt_size(Int n_max);

struct VerifyRequest {
    std::string identity;
    /// Width (or n for the q-analogue and the trapezoid checks).
    Int parameter = 1;
    std::optional<Int> qmax;
};

/// Dispatches one request by identity name. Throws UnknownIdentity.
VerificationReport verify(const VerifyRequest& request);

/// Runs the requests on up to `threads` workers; results keep request order.
std::vector<VerificationReport> verify_all(const std::vector<VerifyRequest>& requests, unsigned threads);

}  // namespace hallforge
