// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line. Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tropcanon/analysis.hpp"
#include "tropcanon/graph.hpp"
#include "tropcanon/matching.hpp"
#include "tropcanon/operator_det.hpp"
#include "tropcanon/parser.hpp"
#include "tropcanon/tropdet.hpp"

using namespace tropcanon;
using Clock = std::chrono::steady_clock;

namespace {

const OrderValue NI = OrderValue::neg_inf();

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    template <class T, class U>
    void expect_eq(const T& got, const U& want, const std::string& what) {
        expect(got == want, what);
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

OrderMatrix mat(const std::vector<std::vector<OrderValue>>& rows) {
    return OrderMatrix::from_rows(rows);
}

OrderMatrix rem15() {
    OrderMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            a.at(i, j) = OrderValue(9 - static_cast<std::int64_t>(i * j));
    return a;
}

OrderMatrix to_diagonal_witness(const OrderMatrix& a) {
    const auto w = tropdet(a).witness;
    OrderMatrix d(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            d.at(static_cast<std::size_t>(w[i]), k) = a.at(i, k);
    return d;
}

using IV = std::vector<std::int64_t>;

// 1. Golden canon suite.
Check criterion_canon_goldens() {
    Check c;
    const auto t0 = Clock::now();
    c.expect_eq(minimal_canon(rem15()).ell, IV{0, 2, 3, 3}, "9-down matrix canon");
    c.expect_eq(minimal_canon(mat({{3, 4, 2}, {1, 3, 4}, {1, 1, 3}})).ell, IV{0, 1, 2},
                "3x3 profile-device matrix canon");
    c.expect_eq(minimal_canon(square_complete(mat({{1, 0, 3, 4}, {0, 1, 2, 0}}))).ell,
                IV{0, 1, 2, 2}, "completed 2x4 canon");
    c.expect_eq(minimal_canon(mat({{5, 2, 3}, {NI, 1, NI}, {3, NI, 1}})).ell, IV{0, 1, 2},
                "three-equation system canon");
    c.expect_eq(minimal_canon(mat({{5, 2, 3}, {NI, 1, 1}, {NI, NI, 2}})).ell, IV{0, 1, 1},
                "triangular-tail system canon");
    c.expect_eq(minimal_canon(mat({{2, NI, NI}, {0, 2, NI}, {NI, 0, 2}})).ell, IV{0, 0, 0},
                "chained second-order system canon");
    c.expect(seconds_since(t0) < 1.0, "canon goldens exceeded 1 s");
    return c;
}

// 2. Cover suite.
Check criterion_covers() {
    Check c;
    const auto p79 = profile(parse_system("x1^(4) + x2'' + x3'\nx1^(5) + x2^(3) + x3''\n"));
    const auto c79 = system_cover(p79);
    c.expect_eq(c79.alpha, IV{0, 1}, "rectangular alpha");
    c.expect_eq(c79.beta, IV{4, 2, 1}, "rectangular beta");

    const auto p120 = profile(parse_system("x1^(5) + x2'' + x3^(3)\nx2'\nx1^(3) - x3'\n"));
    const auto c120 = system_cover(p120);
    c.expect_eq(c120.alpha, IV{2, 1, 0}, "square alpha");
    c.expect_eq(c120.beta, IV{3, 0, 1}, "square beta");

    const auto a28 = mat({{1, 1, 1, 1, 1},
                          {1, 1, 1, 1, 1},
                          {1, 1, 0, 0, 0},
                          {1, 0, 0, 0, 0},
                          {1, 0, 0, 0, 0}});
    const auto j28 = jacobi_cover(a28);
    c.expect_eq(j28.mu, IV{1, 1, 1, 0, 0}, "5x5 canonical mu");
    c.expect_eq(j28.nu, IV{1, 0, 0, 0, 0}, "5x5 canonical nu");
    const auto j28t = jacobi_cover(a28.transpose());
    c.expect_eq(j28t.mu, IV{1, 1, 0, 0, 0}, "transposed canonical mu");
    c.expect_eq(j28t.nu, IV{1, 1, 0, 0, 0}, "transposed canonical nu");
    return c;
}

// 3. Oracle equivalence on >= 500 random matrices up to 7x7.
Check criterion_oracles() {
    Check c;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 500) {
        const std::size_t s = 1 + static_cast<std::size_t>(done) % 7;
        const std::size_t n =
            std::min<std::size_t>(7, s + static_cast<std::size_t>(done) % 3);
        const auto a = oracle::random_matrix(rng, s, n, -5, 20, 20);
        ++done;
        const auto det = tropdet(a);
        c.expect_eq(det.value, oracle::tropdet_bruteforce(a), "tropdet vs enumeration");
        if (det.value.is_neg_inf()) continue;

        const auto lam = minimal_canon(a);
        c.expect(oracle::check_minimal_canon(a, lam), "independent canon checker");

        // Cross-algorithm agreement (the companion algorithms are square-only).
        if (s == n) {
            std::uniform_int_distribution<std::int64_t> off(0, 4);
            std::vector<std::int64_t> lower(s);
            for (auto& v : lower) v = off(rng);
            const auto ell = constrained_canon(a, lower);
            const auto fam = transversal_maxima(a, ell);
            c.expect_eq(minimize_canon(a, ell, fam, MinimizeVariant::path_rebuild).ell, lam.ell,
                        "minimize_canon (path variant)");
            c.expect_eq(minimize_canon(a, ell, fam, MinimizeVariant::ordered).ell, lam.ell,
                        "minimize_canon (ordered variant)");
            const auto d = to_diagonal_witness(a);
            RowToCol diag(s);
            for (std::size_t i = 0; i < s; ++i) diag[i] = static_cast<std::ptrdiff_t>(i);
            c.expect_eq(canon_from_maxima(d, diag).ell, minimal_canon(d).ell,
                        "canon_from_maxima vs minimal_canon");
            c.expect(graph_roundtrip_check(a), "shortest-path roundtrip");
        }
        if (!c.ok) break;
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 30.0, "oracle suite exceeded 30 s");
    if (c.ok) c.detail = std::to_string(done) + " instances";
    return c;
}

// 4. Matching and duality.
Check criterion_matching() {
    Check c;
    const auto ex43 =
        BitMatrix::from_rows({{0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}});
    const auto ex44 =
        BitMatrix::from_rows({{1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}});
    c.expect_eq(match_naive(ex43).size, std::size_t{4}, "augmentation example");
    c.expect_eq(match_hk(ex44).size, std::size_t{4}, "phase example");

    std::mt19937_64 rng(2025);
    for (int t = 0; t < 300 && c.ok; ++t) {
        const std::size_t s = 2 + static_cast<std::size_t>(t) % 5;
        const std::size_t n = 2 + static_cast<std::size_t>(t * 5) % 7;
        const auto a = oracle::random_bits(rng, s, n, 10 + t % 75);
        const auto brute = oracle::matching_bruteforce(a);
        HkStats stats;
        const auto hk = match_hk(a, &stats);
        c.expect_eq(match_naive(a).size, brute, "naive matching size");
        c.expect_eq(hk.size, brute, "layered matching size");
        const auto k = koenig(a);
        c.expect_eq(k.row_cover.size() + k.col_cover.size(), brute, "cover size equals matching");
        const auto bound = 2 * static_cast<std::size_t>(std::floor(std::sqrt(double(hk.size))));
        c.expect(stats.phase_lengths.size() <= std::max<std::size_t>(bound, 1),
                 "phase count bound");
    }
    return c;
}

// 5. Cover counts under exhaustive shift exploration.
Check criterion_cover_counts() {
    Check c;
    for (std::size_t n : {4u, 5u}) {
        OrderMatrix a(n, n, OrderValue(0));
        OrderMatrix b(n, n, OrderValue(0));
        for (std::size_t i = 0; i < n; ++i) {
            a.at(i, i) = OrderValue(1);
            b.at(i, i) = OrderValue(1);
            if (i + 1 < n) {
                a.at(i, i + 1) = OrderValue(1);
                b.at(i, i + 1) = OrderValue(1);
                b.at(i + 1, i) = OrderValue(1);
            }
        }
        c.expect_eq(enumerate_nonneg_minimal_covers(a).size(), n + 1,
                    "bidiagonal cover count (n = " + std::to_string(n) + ")");
        c.expect_eq(enumerate_nonneg_minimal_covers(b).size(), std::size_t{2},
                    "tridiagonal cover count (n = " + std::to_string(n) + ")");
    }
    return c;
}

// 6. Linear operator-determinant oracle.
Check criterion_linear_oracle() {
    Check c;
    const auto t0 = Clock::now();
    const auto ex99 = parse_system("x1'' + x2'\nx1\n");
    c.expect_eq(operator_determinant(ex99).degree(), OrderValue(1), "first example degree");
    c.expect_eq(jacobi_bound(profile(ex99)), OrderValue(1), "first example bound");
    c.expect(nabla_nonzero(truncated_jacobian(ex99, profile(ex99))).status ==
                 NablaReport::Status::nonzero_witness,
             "first example nabla");

    const auto ex100 = parse_system("x1'' + x2' + x1\nx1' + x2\n");
    c.expect_eq(operator_determinant(ex100).degree(), OrderValue(0), "second example degree");
    c.expect_eq(jacobi_bound(profile(ex100)), OrderValue(2), "second example bound");
    c.expect(nabla_nonzero(truncated_jacobian(ex100, profile(ex100))).status ==
                 NablaReport::Status::certainly_zero,
             "second example nabla");

    const auto ex122 = parse_system("x1''\nx2'' + x1\nx3'' + x2\n");
    c.expect_eq(operator_determinant(ex122).degree(), OrderValue(6), "third example degree");
    c.expect_eq(jacobi_bound(profile(ex122)), OrderValue(6), "third example bound");

    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pct(0, 99);
    int done = 0;
    while (done < 100 && c.ok) {
        const int n = 2 + done % 3;
        std::vector<DiffPoly> sys;
        for (int i = 0; i < n; ++i) {
            DiffPoly p;
            for (int j = 1; j <= n; ++j)
                for (int k = 0; k <= 3; ++k)
                    if (pct(rng) < 35) {
                        const int cf = coeff(rng);
                        if (cf) p.add_term(Monomial::var({j, k}), Rational(cf));
                    }
            if (!p.is_zero()) sys.push_back(p);
        }
        if (static_cast<int>(sys.size()) < n) continue;
        const auto pr = profile(sys);
        if (pr.n != static_cast<std::size_t>(n)) continue;
        const auto bound = jacobi_bound(pr);
        if (bound.is_neg_inf()) continue;
        ++done;
        const auto det = operator_determinant(sys);
        c.expect(det.degree() <= bound, "degree bounded by the tropical determinant");
        const auto rep = nabla_nonzero(truncated_jacobian(sys, pr), 4);
        c.expect(rep.status != NablaReport::Status::probably_zero, "exact nabla decision");
        c.expect_eq(det.degree() == bound,
                    rep.status == NablaReport::Status::nonzero_witness,
                    "degree reaches the bound iff nabla is non-zero");
    }
    c.expect(seconds_since(t0) < 10.0, "linear oracle suite exceeded 10 s");
    if (c.ok) c.detail = std::to_string(done) + " random systems";
    return c;
}

// 7. First-order reduction.
Check criterion_first_order() {
    Check c;
    for (const char* text : {"x1^(5) + x2'' + x3^(3)\nx2'\nx1^(3) - x3'\n",
                             "x1''\nx2'' + x1\nx3'' + x2\n"}) {
        const auto sys = parse_system(text);
        const auto pr = profile(sys);
        const auto red = first_order_reduce(sys);
        c.expect_eq(tropdet(red.matrix).value, jacobi_bound(pr), "system bound preserved");
        const auto lam_big = minimal_canon(red.matrix);
        const auto lam = minimal_canon(pr.order_matrix);
        for (std::size_t i = 0; i < pr.s; ++i)
            c.expect_eq(lam_big.ell[i], lam.ell[i], "system canon restriction");
    }
    std::mt19937_64 rng(2027);
    for (int t = 0; t < 100 && c.ok; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t) % 3;
        const auto a = oracle::random_feasible_matrix(rng, n, n, 0, 3, 25);
        const SystemProfile pr{a, BoundMode::strong, n, n};
        const auto red = first_order_reduce(pr);
        c.expect_eq(tropdet(red.matrix).value, tropdet(a).value, "profile bound preserved");
        const auto lam_big = minimal_canon(red.matrix);
        const auto lam = minimal_canon(a);
        for (std::size_t i = 0; i < n; ++i)
            c.expect_eq(lam_big.ell[i], lam.ell[i], "profile canon restriction");
    }
    return c;
}

// 8. Ordering-change bound.
Check criterion_ordering_change() {
    Check c;
    const auto sys = parse_system("x1'' + x2 + x3' + x4\nx2^(3)\nx3'' - x4'\nx4''\n");
    const auto pr = profile(sys);
    const IV e{2, 3, 2, 2}, f{5, 0, 2, 2};
    const auto ell = ordering_change_bound(pr, e, f);
    c.expect_eq(ell.ell, IV{3, 0, 2, 1}, "worked ordering-change value");

    // Minimality: every componentwise-smaller vector violates a constraint.
    auto feasible = [&](const IV& l) {
        for (std::size_t i = 0; i < 4; ++i)
            if (l[i] < std::max<std::int64_t>(f[i] - e[i], 0)) return false;
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < 4; ++i) {
                const auto v = pr.order_matrix.at(i, j);
                if (v.is_finite() &&
                    v.value() + l[i] > pr.order_matrix.at(j, j).value() + l[j])
                    return false;
            }
        return true;
    };
    IV probe(4, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == 4) {
            if (probe != ell.ell) c.expect(!feasible(probe), "smaller vector admissible");
            return;
        }
        for (probe[k] = 0; probe[k] <= ell.ell[k]; ++probe[k]) self(self, k + 1);
        probe[k] = 0;
    };
    rec(rec, 0);
    return c;
}

// 9. Resolvent suite.
Check criterion_resolvent() {
    Check c;
    const auto sys176 = parse_system("x1' - x2 + x3\nx2' - x1 - x3\nx3' - x1 + x2\n");
    const auto rb176 = resolvent_bounds(profile(sys176), 0, 0);
    c.expect_eq(rb176.ell.ell, IV{2, 1, 1}, "circular system canon");
    c.expect_eq(rb176.per_row, std::vector<OrderValue>{2, 1, 1}, "circular system minors");
    c.expect(rb176.unreachable.empty(), "circular system has no unreachable row");

    const auto sys177 =
        parse_system("x1'' - x2\nx2' - x1\nx3 - x1'\nx4 - x3^(3)\nx5 - x4'\n");
    const auto rb177 = resolvent_bounds(profile(sys177), 0, 0);
    c.expect_eq(rb177.ell.ell, IV{3, 2, 4, 1, 0}, "chained system canon");
    c.expect_eq(rb177.unreachable, std::vector<std::size_t>{2, 3, 4},
                "chained system unreachable set");
    c.expect_eq(rb177.unreachable_tropdet, OrderValue(0), "unreachable block determinant");

    const auto a176 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    c.expect(resolvent_identity_check(a176, 0), "minor identity on the worked matrix");

    std::mt19937_64 rng(2028);
    for (int t = 0; t < 300 && c.ok; ++t) {
        const auto a = oracle::random_feasible_matrix(rng, 5, 5, 0, 9, 20);
        const auto j0 = static_cast<std::size_t>(t % 5);
        c.expect(resolvent_identity_check(a, j0), "minor identity on random matrices");
        const SystemProfile pr{a, BoundMode::strong, 5, 5};
        const auto rb = resolvent_bounds(pr, j0, 0);
        for (auto i : rb.reachable)
            c.expect_eq(rb.per_row[i], subdet(a, {i}, {j0}),
                        "reachable minor equals the direct subdeterminant");
    }
    return c;
}

// 10. Complexity smoke test.
Check criterion_complexity() {
    Check c;
    std::mt19937_64 rng(2029);
    {
        const auto a = oracle::random_matrix(rng, 300, 300, 0, 1000, 0);
        const auto t0 = Clock::now();
        const auto lam = minimal_canon(a, CanonVariant::improved);
        const double dt = seconds_since(t0);
        c.expect(lam.ell.size() == 300, "canon size");
        c.expect(dt < 5.0, "dense 300x300 canon took " + std::to_string(dt) + " s");
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << "canon 300x300 " << dt << " s";
        c.detail = os.str();
    }
    {
        const auto b = oracle::random_bits(rng, 1000, 1000, 1);
        const auto t0 = Clock::now();
        const auto m = match_hk(b);
        const double dt = seconds_since(t0);
        c.expect(m.size <= 1000, "matching size");
        c.expect(dt < 5.0, "sparse 1000x1000 matching took " + std::to_string(dt) + " s");
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << ", matching 1000x1000 " << dt << " s";
        c.detail += os.str();
    }
    return c;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Check (*fn)();
    };
    const Entry entries[] = {
        {"golden canon suite", criterion_canon_goldens},
        {"cover suite", criterion_covers},
        {"oracle equivalence", criterion_oracles},
        {"matching and duality", criterion_matching},
        {"cover counts", criterion_cover_counts},
        {"linear operator-determinant oracle", criterion_linear_oracle},
        {"first-order reduction", criterion_first_order},
        {"ordering-change bound", criterion_ordering_change},
        {"resolvent suite", criterion_resolvent},
        {"complexity smoke", criterion_complexity},
    };
    int failures = 0;
    int num = 1;
    for (const auto& e : entries) {
        Check c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        std::printf("criterion %2d %s: %s%s%s\n", num++, c.ok ? "PASS" : "FAIL", e.name,
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
        if (!c.ok) ++failures;
    }
    return failures;
}
