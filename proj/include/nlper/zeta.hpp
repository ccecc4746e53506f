#pragma once

#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace nlper {

inline constexpr double kDefaultTolerance = 1e-12;

// Hurwitz zeta sum_{r>=0} (r+q)^{-s} for real s > 1 and q > 0, evaluated by
// Euler-Maclaurin summation. The returned error bound is the magnitude of the
// first omitted Bernoulli term, which bounds the remainder for this integrand
// since all of its derivatives are completely monotone.
struct ZetaValue {
    double value = 0.0;
    double error_bound = 0.0;
    int terms = 0;  // explicit summands before the tail expansion
};
ZetaValue hurwitz_detailed(double s, double q, double tol = kDefaultTolerance);
double hurwitz(double s, double q, double tol = kDefaultTolerance);

// Per-exponent evaluator of zeta(lambda, i) for integer i >= 1 with a
// monotonically growing cache. Concurrent reads are safe; inserts take an
// exclusive lock and values are deterministic, so callers always observe
// identical bits for the same (lambda, i).
class ZetaEngine {
public:
    explicit ZetaEngine(double lambda, double tolerance = kDefaultTolerance);

    double lambda() const { return lambda_; }
    double tolerance() const { return tol_; }

    double zeta(long i) const;  // zeta(lambda, i)
    double riemann() const { return zeta(1); }
    // S(L) = sum_{i=1}^{L} zeta(lambda, i); S(0) = 0.
    double zeta_prefix(long L) const;
    // d^{-lambda}
    double inv_pow(long d) const;

    std::size_t cached() const;

private:
    void grow(long upto) const;

    double lambda_;
    double tol_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<double> zeta_;    // zeta_[i] for i >= 1, slot 0 unused
    mutable std::vector<double> prefix_;  // prefix_[L]
    mutable std::vector<double> pow_;     // pow_[d] = d^{-lambda}
};

// Returns (sum_{i=A}^{B} zeta(lambda,i) by direct summation, closed form).
std::pair<double, double> zeta_identity_forgen(const ZetaEngine& e, long A, long B);

// Returns both sides of the shift identity
// sum_{i=A+C}^{B+C} zeta(i) = sum_{i=A}^{B} zeta(i) - sum_{i=A}^{B} sum_{k=i}^{i+C-1} k^{-lambda}.
std::pair<double, double> zeta_identity_boundsum(const ZetaEngine& e, long A, long B, long C);

// Derivative of zeta(lambda, l) with respect to l: -lambda * zeta(lambda+1, l).
double hurwitz_zeta_dl(const ZetaEngine& e, double l);

}  // namespace nlper
