#pragma once

#include <string>
#include <utility>
#include <vector>

#include "donaldson/series.hpp"

namespace donaldson {

/// Confluent exponential-sum fit along one variable: find P_j with
/// F = sum_j P_j(s) e^{mu_j s}, deg P_j < N_j. Coefficients of F may be
/// polynomials in the remaining variables.
struct FitProblem {
    TruncSeries samples;
    std::string fit_var;
    std::vector<std::pair<GaussianRational, int>> eigenvalues; // (mu, N)
};

/// Solve the square confluent Vandermonde system from the leading Taylor
/// rows, then verify every remaining sampled coefficient (overdetermined
/// residual must vanish; throws inconsistency_error naming the first failing
/// coefficient index). Returns one polynomial per eigenvalue, over the full
/// variable list of `samples` with the fit variable carrying the s-powers.
std::vector<MultiPoly> fit_exponential_sum(const FitProblem& prob);

/// Identify the frequencies of a one-variable exponential sum from its Taylor
/// coefficients: minimal linear recurrence (exact Berlekamp-Massey on
/// k! * c_k), characteristic roots searched in the Gaussian-integer grid
/// {a+bi : |a|,|b| <= bound}. Returns (mu, multiplicity) sorted by (re, im).
std::vector<std::pair<GaussianRational, int>> detect_frequencies(const TruncSeries& f, long bound);

struct RecoverOptions {
    std::vector<long> bounds; // per direction; a single entry is replicated
    int max_poly_degree = 0;  // bound on deg_t of the class polynomials
    int max_lambda_degree = 0;
};

/// Recover the structured two-sector form from a truncated expansion:
/// sector separation along lambda (eigenvalues +-2, confluent), division by
/// exp(+-Q/2), per-direction confluent inverse Vandermonde transforms over
/// the full integer frequency grid (real for Plus, imaginary for Minus),
/// class assembly, and a mandatory exact re-expansion residual check.
DonaldsonSeries recover_structure(const TruncSeries& g, const ManifoldData& manifold,
                                  const CohClass& w, const OneCycleWord& zword,
                                  const RecoverOptions& opts);

} // namespace donaldson
