#include "widecat/classify.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace widecat;

namespace {

IncTuple cat_tuple(Params p, std::vector<int> e)
{
    return IncTuple(p.category_space(), std::move(e));
}

Collection coll(Params p, std::vector<std::vector<int>> sets)
{
    std::vector<AdmissibleSet> members;
    for (auto& s : sets)
        members.emplace_back(p, std::move(s));
    return Collection(p, std::move(members));
}

// reference closure: random merge order, public predicates only
Collection closure_random(Params p, const std::vector<IncTuple>& xs, std::mt19937& rng)
{
    std::vector<AdmissibleSet> cur;
    for (const IncTuple& x : xs) {
        AdmissibleSet s = tuple_support_set(p, x);
        if (std::find(cur.begin(), cur.end(), s) == cur.end())
            cur.push_back(std::move(s));
    }
    for (;;) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (sets_interlace(cur[i], cur[j]))
                    pairs.emplace_back(i, j);
        if (pairs.empty())
            break;
        const auto [i, j] = pairs[rng() % pairs.size()];
        std::vector<int> u = cur[i].members;
        u.insert(u.end(), cur[j].members.begin(), cur[j].members.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        AdmissibleSet merged(p, std::move(u));
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
        if (std::find(cur.begin(), cur.end(), merged) == cur.end())
            cur.push_back(std::move(merged));
    }
    return Collection(p, std::move(cur));
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("admissible_sets enumeration")
{
    const Params p21(2, 1);
    const auto sets21 = admissible_sets(p21);
    REQUIRE(sets21.size() == 4);
    CHECK(sets21[0].members == std::vector<int>{1, 2});
    CHECK(sets21[1].members == std::vector<int>{1, 3});
    CHECK(sets21[2].members == std::vector<int>{2, 3});
    CHECK(sets21[3].members == std::vector<int>{1, 2, 3});

    for (int d = 1; d <= 4; ++d) {
        const auto one = admissible_sets(Params(1, d));
        REQUIRE(one.size() == 1);
        CHECK(one[0].size() == d + 1);
    }

    CHECK(admissible_sets(Params(3, 2)).size() == 16);
}

TEST_CASE("is_noninterlacing")
{
    const Params p42(4, 2);
    CHECK(is_noninterlacing(Collection(p42, {})));
    CHECK_FALSE(is_noninterlacing(coll(p42, {{1, 3, 6}, {2, 4, 6}})));
    const Params p31(3, 1);
    CHECK(is_noninterlacing(coll(p31, {{1, 2}, {3, 4}})));
}

TEST_CASE("subcategory_of")
{
    const Params p42(4, 2);
    const auto ten = subcategory_of(coll(p42, {{1, 2, 3, 4, 6}}));
    CHECK(ten.size() == 10);
    const std::set<std::vector<int>> want = {{1, 2, 3}, {1, 2, 4}, {1, 2, 6}, {1, 3, 4},
                                             {1, 3, 6}, {1, 4, 6}, {2, 3, 4}, {2, 3, 6},
                                             {2, 4, 6}, {3, 4, 6}};
    std::set<std::vector<int>> got;
    for (const IncTuple& t : ten)
        got.insert(t.entries);
    CHECK(got == want);

    CHECK(subcategory_of(Collection(p42, {})).empty());

    const auto sx = subcategory_of(coll(p42, {{2, 4, 6}}));
    REQUIRE(sx.size() == 1);
    CHECK(sx[0] == cat_tuple(p42, {2, 4, 6}));

    CHECK_THROWS(subcategory_of(coll(p42, {{1, 3, 6}, {2, 4, 6}})));
}

TEST_CASE("wide_closure of the worked example")
{
    const Params p42(4, 2);
    const auto c =
        wide_closure(p42, {cat_tuple(p42, {1, 3, 6}), cat_tuple(p42, {2, 4, 6})});
    CHECK(c == coll(p42, {{1, 2, 3, 4, 6}}));

    const auto single = wide_closure(p42, {cat_tuple(p42, {2, 4, 6})});
    CHECK(single == coll(p42, {{2, 4, 6}}));

    const Params p31(3, 1);
    const auto apart = wide_closure(p31, {cat_tuple(p31, {1, 2}), cat_tuple(p31, {3, 4})});
    CHECK(apart == coll(p31, {{1, 2}, {3, 4}}));

    CHECK(wide_closure(p42, {}) == Collection(p42, {}));
}

TEST_CASE("wide_closure is merge-order independent")
{
    const Params p42(4, 2);
    const auto ts = generate_tuples(p42.category_space());
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IncTuple> xs;
        const std::size_t count = 1 + rng() % 4;
        for (std::size_t i = 0; i < count; ++i)
            xs.push_back(ts[rng() % ts.size()]);
        const auto fixed = wide_closure(p42, xs);
        CHECK(is_noninterlacing(fixed));
        for (int shuffle = 0; shuffle < 5; ++shuffle)
            CHECK(closure_random(p42, xs, rng) == fixed);
    }
}

TEST_CASE("wide_closure subcategory contains the inputs and is a fixed point")
{
    const Params p42(4, 2);
    const auto ts = generate_tuples(p42.category_space());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<IncTuple> xs;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i)
            xs.push_back(ts[rng() % ts.size()]);
        const auto c = wide_closure(p42, xs);
        const auto sub = subcategory_of(c);
        for (const IncTuple& x : xs)
            CHECK(std::find(sub.begin(), sub.end(), x) != sub.end());
        CHECK(wide_closure(p42, sub) == c);
    }
}

TEST_CASE("recognize_wide")
{
    const Params p42(4, 2);
    const auto ten = subcategory_of(coll(p42, {{1, 2, 3, 4, 6}}));
    const auto sigma = recognize_wide(p42, ten);
    REQUIRE(sigma.has_value());
    CHECK(*sigma == coll(p42, {{1, 2, 3, 4, 6}}));

    CHECK_FALSE(
        recognize_wide(p42, {cat_tuple(p42, {1, 3, 6}), cat_tuple(p42, {2, 4, 6})}).has_value());

    const auto empty = recognize_wide(p42, {});
    REQUIRE(empty.has_value());
    CHECK(empty->members.empty());
}

TEST_CASE("relabel")
{
    const Params p42(4, 2);
    const AdmissibleSet s(p42, {2, 3, 4, 6});
    CHECK(relabel(s, IncTuple({2, 2}, {1, 2, 3})) == cat_tuple(p42, {2, 3, 4}));
    CHECK(relabel(s, IncTuple({2, 2}, {2, 3, 4})) == cat_tuple(p42, {3, 4, 6}));

    const AdmissibleSet all(p42, {1, 2, 3, 4, 5, 6});
    for (const IncTuple& x : generate_tuples(p42.category_space()))
        CHECK(relabel(all, x) == x);

    const AdmissibleSet s5(p42, {1, 2, 3, 4, 6});
    CHECK(relabel(s5, IncTuple({3, 2}, {1, 3, 4})) == cat_tuple(p42, {1, 3, 4}));

    CHECK_THROWS(relabel(s, IncTuple({3, 2}, {1, 3, 4}))); // |S|-d mismatch

    // images always lie in X_S
    const auto xs = tuples_of_set(s);
    for (const IncTuple& x : generate_tuples({2, 2}))
        CHECK(std::find(xs.begin(), xs.end(), relabel(s, x)) != xs.end());
}

TEST_CASE("interlace graph is symmetric and loop-free")
{
    for (const Params p : {Params(3, 1), Params(2, 3), Params(3, 2)}) {
        const InterlaceGraph g = build_interlace_graph(p);
        CHECK(g.sets == admissible_sets(p));
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK_FALSE(g.adj[i].test(i));
            for (std::size_t j = 0; j < g.size(); ++j) {
                CHECK(g.adj[i].test(j) == g.adj[j].test(i));
                if (i != j)
                    CHECK(g.adj[i].test(j) == sets_interlace(g.sets[i], g.sets[j]));
            }
        }
    }
}

TEST_CASE("count_wide small values")
{
    CHECK(count_wide(Params(2, 1)).to_string() == "5");
    CHECK(count_wide(Params(3, 2)).to_string() == "47");
    for (int d = 1; d <= 5; ++d)
        CHECK(count_wide(Params(1, d)).to_string() == "2");
}

TEST_CASE("count matches the Catalan closed form and the n=2 recurrence")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(count_wide(Params(n, 1)) == *reference_count(Params(n, 1)));
    std::uint64_t w1 = 5, w2 = 8;
    CHECK(count_wide(Params(2, 1)).to_u64() == w1);
    CHECK(count_wide(Params(2, 2)).to_u64() == w2);
    for (int d = 3; d <= 7; ++d) {
        const std::uint64_t next = w2 + w1 - 1;
        CHECK(count_wide(Params(2, d)).to_u64() == next);
        w1 = w2;
        w2 = next;
    }
}

TEST_CASE("reference_count coverage")
{
    CHECK(reference_count(Params(5, 1))->to_string() == "132");
    CHECK(reference_count(Params(8, 1))->to_string() == "4862");
    CHECK(reference_count(Params(2, 5))->to_string() == "30");
    CHECK(reference_count(Params(1, 9))->to_string() == "2");
    CHECK(reference_count(Params(3, 4))->to_string() == "1724");
    CHECK(reference_count(Params(8, 2))->to_string() == "42579642");
    CHECK_FALSE(reference_count(Params(6, 3)).has_value());
    CHECK_FALSE(reference_count(Params(9, 2)).has_value());
}

TEST_CASE("enumeration basics")
{
    const Params p11(1, 1);
    std::vector<Collection> cs;
    enumerate_collections(p11, [&](const Collection& c) { cs.push_back(c); });
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].members.empty());
    CHECK(cs[1] == coll(p11, {{1, 2}}));

    const Params p21(2, 1);
    cs.clear();
    enumerate_collections(p21, [&](const Collection& c) { cs.push_back(c); });
    REQUIRE(cs.size() == 5);
    CHECK(cs[0].members.empty());
    for (std::size_t i = 1; i < cs.size(); ++i)
        CHECK(cs[i].members.size() == 1); // all four admissible sets pairwise interlace

    std::vector<Collection> c31;
    enumerate_collections(Params(3, 1), [&](const Collection& c) { c31.push_back(c); });
    CHECK(c31.size() == 14);
}

TEST_CASE("enumeration length equals the count and collections are distinct")
{
    for (const Params p : {Params(2, 2), Params(3, 1), Params(3, 2), Params(2, 3)}) {
        std::set<std::vector<std::vector<int>>> seen;
        std::uint64_t len = 0;
        enumerate_collections(p, [&](const Collection& c) {
            std::vector<std::vector<int>> key;
            for (const AdmissibleSet& s : c.members)
                key.push_back(s.members);
            CHECK(seen.insert(key).second);
            CHECK(is_noninterlacing(c));
            ++len;
        });
        CHECK(BigUint(len) == count_wide(p));
    }
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate_collections(Params(3, 1), [](const Collection&) {}, 5),
                    CapExceeded);
    // exactly at the count: no throw
    enumerate_collections(Params(3, 1), [](const Collection&) {}, 14);
}

TEST_CASE("count budget")
{
    CountOptions opts;
    opts.budget_secs = 0.0; // expires immediately
    CHECK_THROWS_AS(count_wide(Params(4, 2), opts), BudgetExceeded);
}

TEST_CASE("parallel count equals sequential")
{
    CountOptions seq, par;
    par.jobs = 2;
    for (const Params p : {Params(3, 2), Params(4, 1)})
        CHECK(count_wide(p, seq) == count_wide(p, par));
}

TEST_CASE("closure minimality against full enumeration")
{
    for (const Params p : {Params(2, 2), Params(3, 1)}) {
        const auto ts = generate_tuples(p.category_space());
        std::vector<Collection> all;
        enumerate_collections(p, [&](const Collection& c) { all.push_back(c); });
        std::vector<std::set<std::vector<int>>> subs;
        for (const Collection& c : all) {
            std::set<std::vector<int>> s;
            for (const IncTuple& t : subcategory_of(c))
                s.insert(t.entries);
            subs.push_back(std::move(s));
        }

        // all subsets of tuples of size <= 3
        const std::size_t nt = ts.size();
        std::vector<std::vector<std::size_t>> picks{{}};
        for (std::size_t a = 0; a < nt; ++a) {
            picks.push_back({a});
            for (std::size_t b = a + 1; b < nt; ++b) {
                picks.push_back({a, b});
                for (std::size_t c = b + 1; c < nt; ++c)
                    picks.push_back({a, b, c});
            }
        }

        for (const auto& pick : picks) {
            std::vector<IncTuple> xs;
            std::set<std::vector<int>> xset;
            for (std::size_t i : pick) {
                xs.push_back(ts[i]);
                xset.insert(ts[i].entries);
            }
            // the enumerated collections whose subcategory contains xs
            int best = -1;
            for (std::size_t ci = 0; ci < all.size(); ++ci) {
                if (!std::includes(subs[ci].begin(), subs[ci].end(), xset.begin(), xset.end()))
                    continue;
                if (best < 0 ||
                    subs[ci].size() < subs[static_cast<std::size_t>(best)].size())
                    best = static_cast<int>(ci);
            }
            REQUIRE(best >= 0);
            // the minimum is unique and achieved by wide_closure
            const auto closed = wide_closure(p, xs);
            CHECK(closed == all[static_cast<std::size_t>(best)]);
            for (std::size_t ci = 0; ci < all.size(); ++ci) {
                if (static_cast<int>(ci) == best)
                    continue;
                if (std::includes(subs[ci].begin(), subs[ci].end(), xset.begin(), xset.end()))
                    CHECK(std::includes(subs[ci].begin(), subs[ci].end(),
                                        subs[static_cast<std::size_t>(best)].begin(),
                                        subs[static_cast<std::size_t>(best)].end()));
            }
        }
    }
}

TEST_CASE("bijection round-trip on enumerated collections")
{
    for (const Params p : {Params(2, 2), Params(3, 1), Params(3, 2), Params(2, 3)}) {
        enumerate_collections(p, [&](const Collection& c) {
            const auto sub = subcategory_of(c);
            const auto back = recognize_wide(p, sub);
            REQUIRE(back.has_value());
            CHECK(*back == c);
        });
    }
}

TEST_CASE("witness and extension-middle containment in closures")
{
    const Params p(4, 2);
    const auto ts = generate_tuples(p.category_space());
    for (const IncTuple& x : ts) {
        for (const IncTuple& y : ts) {
            if (e_hom(x, y)) {
                const auto sub = subcategory_of(wide_closure(p, {x, y}));
                const auto contains = [&](const IncTuple& t) {
                    return std::binary_search(sub.begin(), sub.end(), t);
                };
                for (int k = 1; k <= p.d; ++k)
                    if (const auto w = kernel_witness(x, y, k))
                        CHECK(contains(*w));
                for (int k = 0; k <= p.d - 1; ++k)
                    if (const auto w = cokernel_witness(x, y, k))
                        CHECK(contains(*w));
            }
            if (e_ext(x, y)) {
                const auto sub = subcategory_of(wide_closure(p, {x, y}));
                for (unsigned mask = 0; mask < (1u << (p.d + 1)); ++mask) {
                    std::vector<int> ze(static_cast<std::size_t>(p.d + 1));
                    bool valid = true;
                    for (int i = 0; i <= p.d && valid; ++i) {
                        ze[static_cast<std::size_t>(i)] = (mask >> i & 1) ? y[i] : x[i];
                        if (i > 0 && ze[static_cast<std::size_t>(i - 1)] >=
                                          ze[static_cast<std::size_t>(i)])
                            valid = false;
                    }
                    if (!valid)
                        continue;
                    const IncTuple z(p.category_space(), ze);
                    CHECK(std::binary_search(sub.begin(), sub.end(), z));
                }
            }
        }
    }
}

} // TEST_SUITE
