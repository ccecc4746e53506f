#include "nlper/zeta.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "nlper/errors.hpp"

namespace nlper {

namespace {

// B_{2k} / (2k)! for k = 1..7.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
    (7.0 / 6.0) / 87178291200.0,
};
constexpr int kCorrections = 6;  // terms used; the seventh bounds the remainder

void check_exponent(double s) {
    if (!(s > 1.0)) throw DivergentParameter("zeta requires exponent > 1");
}

// Tail expansion at the point x = N + q. Returns the value and the bound.
std::pair<double, double> tail(double s, double x) {
    double value = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    // rising = s (s+1) ... (s+2k-2), power = x^{-s-2k+1}
    double rising = s;
    double power = std::pow(x, -s - 1.0);
    double corr[kCorrections];
    for (int k = 0; k < kCorrections; ++k) {
        corr[k] = kBernoulliOverFactorial[static_cast<std::size_t>(k)] * rising * power;
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
        power /= x * x;
    }
    for (int k = kCorrections - 1; k >= 0; --k) value += corr[k];
    double bound = std::fabs(kBernoulliOverFactorial[kCorrections] * rising * power);
    return {value, bound};
}

}  // namespace

ZetaValue hurwitz_detailed(double s, double q, double tol) {
    check_exponent(s);
    if (!(q > 0.0)) throw InvalidArgument("hurwitz zeta requires q > 0");
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    int n = 0;
    auto t = tail(s, q);
    // A small safety factor absorbs rounding in the head sum.
    while (t.second > 0.25 * tol) {
        n = n < 8 ? n + 1 : n + n / 2;
        t = tail(s, n + q);
        if (n > 100000000) throw InvalidArgument("hurwitz zeta: cutoff did not converge");
    }
    double head = 0.0;
    for (int r = n - 1; r >= 0; --r) head += std::pow(r + q, -s);
    return {t.first + head, t.second, n};
}

double hurwitz(double s, double q, double tol) { return hurwitz_detailed(s, q, tol).value; }

// ---------------------------------------------------------------------------

ZetaEngine::ZetaEngine(double lambda, double tolerance) : lambda_(lambda), tol_(tolerance) {
    check_exponent(lambda);
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    zeta_.push_back(0.0);
    prefix_.push_back(0.0);
    pow_.push_back(0.0);
}

void ZetaEngine::grow(long upto) const {
    std::unique_lock lock(mutex_);
    long have = static_cast<long>(zeta_.size()) - 1;
    if (upto <= have) return;
    // Grow geometrically so repeated small extensions stay cheap.
    long target = std::max(upto, have + have / 2 + 16);
    zeta_.reserve(static_cast<std::size_t>(target) + 1);
    prefix_.reserve(static_cast<std::size_t>(target) + 1);
    pow_.reserve(static_cast<std::size_t>(target) + 1);
    for (long i = have + 1; i <= target; ++i) {
        double z = hurwitz(lambda_, static_cast<double>(i), tol_);
        zeta_.push_back(z);
        prefix_.push_back(prefix_.back() + z);
        pow_.push_back(std::pow(static_cast<double>(i), -lambda_));
    }
}

double ZetaEngine::zeta(long i) const {
    if (i < 1) throw InvalidArgument("zeta offset must be >= 1");
    {
        std::shared_lock lock(mutex_);
        if (i < static_cast<long>(zeta_.size())) return zeta_[static_cast<std::size_t>(i)];
    }
    grow(i);
    std::shared_lock lock(mutex_);
    return zeta_[static_cast<std::size_t>(i)];
}

double ZetaEngine::zeta_prefix(long L) const {
    if (L < 0) throw InvalidArgument("prefix length must be >= 0");
    if (L == 0) return 0.0;
    {
        std::shared_lock lock(mutex_);
        if (L < static_cast<long>(prefix_.size())) return prefix_[static_cast<std::size_t>(L)];
    }
    grow(L);
    std::shared_lock lock(mutex_);
    return prefix_[static_cast<std::size_t>(L)];
}

double ZetaEngine::inv_pow(long d) const {
    if (d < 1) throw InvalidArgument("distance must be >= 1");
    {
        std::shared_lock lock(mutex_);
        if (d < static_cast<long>(pow_.size())) return pow_[static_cast<std::size_t>(d)];
    }
    if (d > 1000000) return std::pow(static_cast<double>(d), -lambda_);
    grow(d);
    std::shared_lock lock(mutex_);
    return pow_[static_cast<std::size_t>(d)];
}

std::size_t ZetaEngine::cached() const {
    std::shared_lock lock(mutex_);
    return zeta_.size() - 1;
}

// ---------------------------------------------------------------------------

std::pair<double, double> zeta_identity_forgen(const ZetaEngine& e, long A, long B) {
    if (A < 1 || B < A) throw InvalidArgument("forgen identity needs 1 <= A <= B");
    double lhs = 0.0;
    for (long i = A; i <= B; ++i) lhs += e.zeta(i);
    const double lam = e.lambda();
    double rhs = static_cast<double>(B - (A - 1)) * e.riemann();
    for (long k = 1; k <= B - 1; ++k) rhs -= static_cast<double>(B - k) * std::pow(k, -lam);
    for (long k = 1; k <= A - 2; ++k) rhs += static_cast<double>(A - 1 - k) * std::pow(k, -lam);
    return {lhs, rhs};
}

std::pair<double, double> zeta_identity_boundsum(const ZetaEngine& e, long A, long B, long C) {
    if (A < 1 || B < A || C < 1) throw InvalidArgument("boundsum identity needs 1 <= A <= B, C >= 1");
    double lhs = 0.0;
    for (long i = A + C; i <= B + C; ++i) lhs += e.zeta(i);
    double rhs = 0.0;
    for (long i = A; i <= B; ++i) {
        rhs += e.zeta(i);
        for (long k = i; k <= i + C - 1; ++k) rhs -= e.inv_pow(k);
    }
    return {lhs, rhs};
}

double hurwitz_zeta_dl(const ZetaEngine& e, double l) {
    if (!(l >= 1.0)) throw InvalidArgument("derivative offset must be >= 1");
    return -e.lambda() * hurwitz(e.lambda() + 1.0, l, e.tolerance());
}

}  // namespace nlper
