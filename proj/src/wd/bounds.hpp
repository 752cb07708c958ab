#ifndef WD_BOUNDS_HPP
#define WD_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace wd {

// Certified bounds grow exponentially in the recursion depth, so everything
// bound-valued is arbitrary precision.
using Bound = boost::multiprecision::cpp_int;

// Weak-diameter bound for the union of a coloring on a (k,r)-centered set
// with an N-bounded coloring of the rest:
//   f(0,r,ell,N) = N,  f(k,r,ell,N) = 2r + 2*ell + 2*f(k-1,r,ell,N).
Bound bound_combine(int k, int r, int ell, const Bound& n);

// Bound for an arbitrary coloring of a graph whose whole vertex set is
// (k,r)-centered: bound_combine with N = 1.
Bound bound_all_centered(int k, int r, int ell);

struct TreeExtensionParts {
    Bound f1_of_n;        // f_1(N)
    Bound n_theta;        // N_theta, clamped to >= theta+1
    Bound n_theta_prime;  // N'_theta
    Bound fstar0;
};

// f*(eta) for the recursive coloring over an (eta,theta,F,F')-construction:
//   f_1(x)   = bound_combine(theta, 3*ell, ell, x)
//   N_theta  = max(bound_combine(theta, 0, ell, 1), theta + 1)
//   N'_theta = bound_combine(theta, 3*ell, ell, 1)
//   f*(0)    = N_Fplus + N'_theta + N_theta + f_1(N)
//   f*(x)    = max((14*theta + 4)*ell + 7*theta*ell^2 * f_1(f*(x-1)), f*(0))
Bound bound_tree_extension(int eta, int theta, int ell, const Bound& n,
                           const Bound& n_fplus);

TreeExtensionParts tree_extension_parts(int theta, int ell, const Bound& n,
                                        const Bound& n_fplus);

// f_1 applied to an arbitrary argument (used for per-level checks).
Bound tree_extension_f1(int theta, int ell, const Bound& x);

// Decimal string; bounds routinely exceed 64 bits.
std::string bound_str(const Bound& b);

// Saturating conversion for comparisons against measured (small) diameters.
std::int64_t bound_to_i64_saturating(const Bound& b);

}  // namespace wd

#endif
