#include "wd/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace wd {

Bound bound_combine(int k, int r, int ell, const Bound& n) {
    if (k < 0 || r < 0) throw std::invalid_argument("k, r must be nonnegative");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    // Closed form of the unrolled recurrence: 2^k*N + (2r+2*ell)*(2^k - 1).
    Bound pow2k = Bound(1) << k;
    return pow2k * n + Bound(2 * (r + static_cast<long long>(ell))) * (pow2k - 1);
}

Bound bound_all_centered(int k, int r, int ell) {
    return bound_combine(k, r, ell, Bound(1));
}

Bound tree_extension_f1(int theta, int ell, const Bound& x) {
    return bound_combine(theta, 3 * ell, ell, x);
}

TreeExtensionParts tree_extension_parts(int theta, int ell, const Bound& n,
                                        const Bound& n_fplus) {
    if (theta < 0) throw std::invalid_argument("theta must be nonnegative");
    TreeExtensionParts p;
    p.f1_of_n = tree_extension_f1(theta, ell, n);
    p.n_theta = std::max(bound_combine(theta, 0, ell, Bound(1)), Bound(theta + 1));
    p.n_theta_prime = bound_all_centered(theta, 3 * ell, ell);
    p.fstar0 = n_fplus + p.n_theta_prime + p.n_theta + p.f1_of_n;
    return p;
}

Bound bound_tree_extension(int eta, int theta, int ell, const Bound& n,
                           const Bound& n_fplus) {
    if (eta < 0 || eta > theta)
        throw std::invalid_argument("require 0 <= eta <= theta");
    TreeExtensionParts parts = tree_extension_parts(theta, ell, n, n_fplus);
    Bound fstar = parts.fstar0;
    for (int x = 1; x <= eta; ++x) {
        Bound grown = Bound((14LL * theta + 4) * ell) +
                      Bound(7LL * theta * ell * ell) *
                          tree_extension_f1(theta, ell, fstar);
        fstar = std::max(grown, parts.fstar0);
    }
    return fstar;
}

std::string bound_str(const Bound& b) { return b.str(); }

std::int64_t bound_to_i64_saturating(const Bound& b) {
    static const Bound kMax = Bound(std::numeric_limits<std::int64_t>::max());
    if (b >= kMax) return std::numeric_limits<std::int64_t>::max();
    if (b <= -kMax) return std::numeric_limits<std::int64_t>::min();
    return static_cast<std::int64_t>(b);
}

}  // namespace wd
