#pragma once

#include <cstdint>
#include <vector>

#include "ria/real.hpp"

namespace ria {

/// Empirical Khintchine-Groshev constant for the linear form
/// |p + alpha . q| with psi(q) = q^-(m+eps):
///   kappa_hat = min over 0 < max|q_i| <= Qmax of |p + alpha.q| (max|q_i|)^(m+eps)
/// with p the nearest integer to -alpha.q.  Witness is canonical (first
/// nonzero q coordinate positive).
struct KhintchineEstimate {
    std::vector<Real> alpha;
    double epsilon = 0;
    int64_t Qmax = 0;
    Real kappa_hat;
    mpz_class p;
    std::vector<int64_t> q;
};

/// Exhaustive brute-force minimum (the oracle of record; no heuristic
/// pruning of the q lattice).
KhintchineEstimate khintchine_kappa(const std::vector<Real>& alpha, double epsilon, int64_t Qmax);

/// One estimate per requested Qmax from a single lattice pass.  qmax_list
/// must be strictly increasing.
std::vector<KhintchineEstimate> khintchine_kappa_profile(const std::vector<Real>& alpha,
                                                         double epsilon,
                                                         const std::vector<int64_t>& qmax_list);

/// |p + alpha.q| (max|q_i|)^(m+eps) evaluated the same way as the estimator;
/// substituting a witness back reproduces kappa_hat exactly.
Real khintchine_eval(const std::vector<Real>& alpha, double epsilon, const mpz_class& p,
                     const std::vector<int64_t>& q);

}  // namespace ria
