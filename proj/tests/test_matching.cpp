#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tropcanon/matching.hpp"

using namespace tropcanon;

namespace {

BitMatrix bits(const std::vector<std::vector<int>>& rows) { return BitMatrix::from_rows(rows); }

bool cover_is_valid(const BitMatrix& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    std::vector<std::uint8_t> r(a.rows(), 0), c(a.cols(), 0);
    for (auto i : rows) r[i] = 1;
    for (auto j : cols) c[j] = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.one(i, j) && !r[i] && !c[j]) return false;
    return true;
}

} // namespace

TEST_CASE("match_naive: identity and the worked 4x4") {
    BitMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(match_naive(id).size == 4);

    const auto ex43 = bits({{0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}});
    CHECK(match_naive(ex43).size == 4);
}

TEST_CASE("match_hk: worked 4x4, zero matrix, and agreement with naive") {
    const auto ex44 = bits({{1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK(match_hk(ex44).size == 4);
    CHECK(match_hk(BitMatrix(3, 5)).size == 0);

    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        const auto a = oracle::random_bits(rng, 2 + t % 5, 2 + (t * 7) % 7, 10 + t % 80);
        const auto naive = match_naive(a);
        const auto hk = match_hk(a);
        CHECK(naive.size == hk.size);
        CHECK(hk.size == oracle::matching_bruteforce(a));
    }
}

TEST_CASE("match_hk: phase lengths increase and the phase count is bounded") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 120; ++t) {
        const auto a = oracle::random_bits(rng, 4 + t % 8, 4 + (t * 3) % 9, 10 + t % 60);
        HkStats stats;
        const auto r = match_hk(a, &stats);
        for (std::size_t k = 1; k < stats.phase_lengths.size(); ++k)
            CHECK(stats.phase_lengths[k] > stats.phase_lengths[k - 1]);
        const auto bound =
            2 * static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(r.size))));
        CHECK(stats.phase_lengths.size() <= std::max<std::size_t>(bound, 1));
        // The greedy pass already matches at least half of the maximum.
        CHECK(2 * stats.greedy_size >= r.size);
    }
}

TEST_CASE("koenig: duality on fixed and random instances") {
    BitMatrix ones(3, 3, true);
    const auto k1 = koenig(ones);
    CHECK(k1.match.size == 3);
    CHECK(k1.row_cover.size() + k1.col_cover.size() == 3);
    CHECK(cover_is_valid(ones, k1.row_cover, k1.col_cover));

    // Upper-bidiagonal ones, n = 4: a full matching exists.
    const auto tri = bits({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(koenig(tri).match.size == 4);
    CHECK(oracle::matching_bruteforce(tri) == 4);

    std::mt19937_64 rng(71);
    for (int t = 0; t < 150; ++t) {
        const auto a = oracle::random_bits(rng, 2 + t % 4, 2 + (t * 5) % 4, 15 + t % 70);
        const auto k = koenig(a);
        CHECK(k.row_cover.size() + k.col_cover.size() == k.match.size);
        CHECK(cover_is_valid(a, k.row_cover, k.col_cover));
        CHECK(k.match.size == oracle::min_cover_bruteforce(a));
    }
}

TEST_CASE("extremal_cover: fixed instances") {
    BitMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, true);
    const auto [r, c] = extremal_cover(id, ExtremalMode::row_maximal);
    CHECK(r == std::vector<std::size_t>{0, 1, 2});
    CHECK(c.empty());

    // One column of ones, otherwise empty: the column is still forced.
    const auto forced = bits({{1, 0}, {1, 0}});
    const auto [fr, fc] = extremal_cover(forced, ExtremalMode::row_maximal);
    CHECK(fr.empty());
    CHECK(fc == std::vector<std::size_t>{0});

    const auto rem28 = bits({{1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1},
                             {1, 1, 0, 0, 0},
                             {1, 0, 0, 0, 0},
                             {1, 0, 0, 0, 0}});
    const auto [rr, rc] = extremal_cover(rem28, ExtremalMode::row_maximal);
    CHECK(rr == std::vector<std::size_t>{0, 1, 2});
    CHECK(rc == std::vector<std::size_t>{0});
    const auto [cr, cc] = extremal_cover(rem28, ExtremalMode::col_maximal);
    CHECK(cr == std::vector<std::size_t>{0, 1});
    CHECK(cc == std::vector<std::size_t>{0, 1});
}

TEST_CASE("extremal_cover: uniqueness against enumerated minimum covers") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 120; ++t) {
        const auto a = oracle::random_bits(rng, 2 + t % 4, 2 + (t * 3) % 4, 20 + t % 60);
        const auto size = oracle::min_cover_bruteforce(a);
        const auto [r, c] = extremal_cover(a, ExtremalMode::row_maximal);
        CHECK(r.size() + c.size() == size);
        CHECK(cover_is_valid(a, r, c));
        // Every other minimum cover's row set is contained in r.
        for (std::size_t mask = 0; mask < (std::size_t{1} << a.rows()); ++mask) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t i = 0; i < a.rows(); ++i)
                if (mask & (std::size_t{1} << i)) rows.push_back(i);
            std::vector<std::uint8_t> needed(a.cols(), 0);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (mask & (std::size_t{1} << i)) continue;
                for (std::size_t j = 0; j < a.cols(); ++j)
                    if (a.one(i, j)) needed[j] = 1;
            }
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (needed[j]) cols.push_back(j);
            if (rows.size() + cols.size() != size) continue;
            std::vector<std::uint8_t> in_r(a.rows(), 0);
            for (auto i : r) in_r[i] = 1;
            for (auto i : rows) CHECK(in_r[i]);
        }
    }
}
