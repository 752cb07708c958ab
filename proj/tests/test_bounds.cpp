#include <doctest.h>

#include "test_util.hpp"
#include "wd/bounds.hpp"

using namespace wd;

TEST_CASE("bound_combine worked values") {
    CHECK(bound_combine(0, 5, 2, Bound(7)) == 7);
    CHECK(bound_combine(1, 0, 1, Bound(1)) == 4);
    CHECK(bound_combine(2, 3, 2, Bound(5)) == 50);
}

TEST_CASE("bound_combine matches the literal recurrence") {
    for (int k = 0; k <= 20; ++k)
        for (int r : {0, 1, 3, 7})
            for (int ell : {1, 2, 4})
                for (long long n : {1, 2, 9}) {
                    CHECK(bound_combine(k, r, ell, Bound(n)) ==
                          wdtest::recur_combine(k, r, ell, Bound(n)));
                }
}

TEST_CASE("bound_tree_extension worked values") {
    // theta=1, ell=1: f1(x)=8+2x, N_theta=max(4,2)=4, N'_theta=10
    auto parts = tree_extension_parts(1, 1, Bound(1), Bound(1));
    CHECK(parts.f1_of_n == 10);
    CHECK(parts.n_theta == 4);
    CHECK(parts.n_theta_prime == 10);
    CHECK(bound_tree_extension(0, 1, 1, Bound(1), Bound(1)) == 25);
    CHECK(bound_tree_extension(1, 1, 1, Bound(1), Bound(1)) == 424);
}

TEST_CASE("bound_tree_extension matches the literal recurrence") {
    for (int theta : {0, 1, 2, 4})
        for (int eta = 0; eta <= theta; ++eta)
            for (int ell : {1, 2, 3})
                for (long long n : {1, 6}) {
                    Bound nf = Bound(n) + 3;
                    CHECK(bound_tree_extension(eta, theta, ell, Bound(n), nf) ==
                          wdtest::recur_fstar(eta, theta, ell, Bound(n), nf));
                }
}

TEST_CASE("f* is nondecreasing in eta and exceeds 64 bits eventually") {
    Bound prev = 0;
    for (int eta = 0; eta <= 8; ++eta) {
        Bound cur = bound_tree_extension(eta, 8, 4, Bound(100), Bound(100));
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(prev > Bound(std::numeric_limits<std::int64_t>::max()));
    CHECK(bound_to_i64_saturating(prev) ==
          std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("bound argument validation") {
    CHECK_THROWS(bound_combine(-1, 0, 1, Bound(1)));
    CHECK_THROWS(bound_combine(0, 0, 0, Bound(1)));
    CHECK_THROWS(bound_tree_extension(3, 2, 1, Bound(1), Bound(1)));
}
