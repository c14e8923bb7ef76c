// Acceptance suite: one line per criterion, exit code = number of failures.

#include "widecat/classify.hpp"
#include "widecat/cli.hpp"
#include "widecat/homology.hpp"
#include "widecat/reps.hpp"
#include "widecat/tuples.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace widecat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "")
{
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << "  " << name;
    if (!detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool count_matches(int n, int d, const std::string& expect, double budget_secs, double& elapsed)
{
    const auto t0 = Clock::now();
    CountOptions opts;
    opts.budget_secs = budget_secs;
    try {
        const BigUint w = count_wide(Params(n, d), opts);
        elapsed = seconds_since(t0);
        return w.to_string() == expect && elapsed < budget_secs;
    } catch (const BudgetExceeded&) {
        elapsed = seconds_since(t0);
        return false;
    }
}

void criterion_1_table()
{
    struct Cell {
        int n, d;
        std::string w;
    };
    std::vector<Cell> cells;
    for (int d = 1; d <= 7; ++d)
        cells.push_back({1, d, "2"});
    const char* w2[] = {"5", "8", "12", "19", "30", "48", "77"};
    for (int d = 1; d <= 7; ++d)
        cells.push_back({2, d, w2[d - 1]});
    const char* wn1[] = {"2", "5", "14", "42", "132", "429", "1430", "4862"};
    for (int n = 1; n <= 8; ++n)
        cells.push_back({n, 1, wn1[n - 1]});
    cells.push_back({3, 2, "47"});
    cells.push_back({4, 2, "374"});
    cells.push_back({5, 2, "4083"});
    cells.push_back({3, 3, "237"});
    cells.push_back({3, 4, "1724"});

    bool ok = true;
    double worst = 0;
    std::string bad;
    for (const Cell& c : cells) {
        double elapsed = 0;
        if (!count_matches(c.n, c.d, c.w, 60.0, elapsed)) {
            ok = false;
            bad = "w_{" + std::to_string(c.n) + "," + std::to_string(c.d) + "}";
            break;
        }
        worst = std::max(worst, elapsed);
    }
    std::ostringstream detail;
    if (ok)
        detail << cells.size() << " cells exact, worst " << worst << "s < 60s";
    else
        detail << "mismatch or timeout at " << bad;
    report(1, "table reproduction w_{n,d}", ok, detail.str());
}

void criterion_2_stretch()
{
    struct Cell {
        int n, d;
        std::string w;
    };
    const std::vector<Cell> binding = {{4, 3, "16830"}, {6, 2, "62824"}, {3, 5, "17934"}};
    bool ok = true;
    double worst = 0;
    for (const Cell& c : binding) {
        double elapsed = 0;
        if (!count_matches(c.n, c.d, c.w, 900.0, elapsed))
            ok = false;
        worst = std::max(worst, elapsed);
    }

    // the remaining table entries are optional but must be exact when computed
    const std::vector<Cell> optional = {{7, 2, "1376012"}, {8, 2, "42579642"},
                                        {5, 3, "4597078"}, {3, 6, "273092"},
                                        {3, 7, "5732137"}, {4, 4, "3499884"}};
    int optional_done = 0;
    for (const Cell& c : optional) {
        CountOptions opts;
        opts.budget_secs = 300.0;
        try {
            if (count_wide(Params(c.n, c.d), opts).to_string() != c.w)
                ok = false;
            ++optional_done;
        } catch (const BudgetExceeded&) {
            // optional cell skipped on slow hardware
        }
    }

    std::ostringstream detail;
    detail << "w_{4,3}, w_{6,2}, w_{3,5} exact, worst " << worst << "s < 900s; "
           << optional_done << "/6 optional cells computed and exact";
    report(2, "stretch counts", ok, detail.str());
}

struct GridOutcome {
    std::uint64_t pairs = 0;
    std::uint64_t hom_mismatch = 0;
    std::uint64_t ext_mismatch = 0;
    std::uint64_t vanish_checked = 0;
    std::uint64_t vanish_violations = 0;
};

GridOutcome run_grid(Params p, std::uint32_t field)
{
    GridOutcome g;
    const ModuleCategory cat(p, field);
    const auto ts = generate_tuples(p.category_space());
    for (const IncTuple& x : ts) {
        for (const IncTuple& y : ts) {
            ++g.pairs;
            if (hom_dim_oracle(cat, x, y) != (e_hom(x, y) ? 1 : 0))
                ++g.hom_mismatch;
            if (ext_dim_oracle(cat, y, x, p.d) != (e_ext(x, y) ? 1 : 0))
                ++g.ext_mismatch;
            for (int deg = 1; deg < p.d; ++deg) {
                ++g.vanish_checked;
                if (ext_dim_oracle(cat, y, x, deg) != 0)
                    ++g.vanish_violations;
            }
        }
    }
    return g;
}

void criteria_3_4_oracles()
{
    const std::vector<Params> grid = {Params(5, 1), Params(4, 2), Params(3, 3), Params(2, 4)};
    const auto t0 = Clock::now();
    GridOutcome total;
    for (const Params& p : grid) {
        for (const std::uint32_t field : {2u, 32003u}) {
            const GridOutcome g = run_grid(p, field);
            total.pairs += g.pairs;
            total.hom_mismatch += g.hom_mismatch;
            total.ext_mismatch += g.ext_mismatch;
            total.vanish_checked += g.vanish_checked;
            total.vanish_violations += g.vanish_violations;
        }
    }
    const double elapsed = seconds_since(t0);

    {
        std::ostringstream detail;
        detail << total.pairs << " ordered pairs at p=2 and p=32003, " << total.hom_mismatch
               << " hom and " << total.ext_mismatch << " ext^d mismatches, " << elapsed
               << "s < 300s";
        report(3, "formula/oracle equivalence",
               total.hom_mismatch == 0 && total.ext_mismatch == 0 && elapsed < 300.0,
               detail.str());
    }
    {
        std::ostringstream detail;
        detail << total.vanish_checked << " checks, " << total.vanish_violations << " violations";
        report(4, "intermediate Ext vanishing", total.vanish_violations == 0, detail.str());
    }
}

void criterion_5_exactness()
{
    std::uint64_t sequences = 0, seq_bad = 0, resolutions = 0, res_bad = 0;
    for (const Params p : {Params(4, 2), Params(3, 3)}) {
        const ModuleCategory cat(p);
        const auto ts = generate_tuples(p.category_space());
        const auto exact = [](const RepComplex& c) {
            try {
                const auto h = complex_homology_dims(c);
                return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
            } catch (const std::runtime_error&) {
                return false;
            }
        };
        for (const IncTuple& x : ts) {
            for (const IncTuple& y : ts) {
                if (!e_ext(x, y))
                    continue;
                ++sequences;
                if (!exact(ext_sequence(cat, x, y)))
                    ++seq_bad;
            }
            if (x[0] > 1) {
                ++resolutions;
                if (!exact(resolution(cat, x, 1)))
                    ++res_bad;
            }
        }
    }
    std::ostringstream detail;
    detail << sequences << " sequences and " << resolutions << " resolutions, " << seq_bad + res_bad
           << " failures";
    report(5, "exactness suites at (4,2) and (3,3)", seq_bad == 0 && res_bad == 0, detail.str());
}

void criterion_6_worked_example()
{
    bool ok = true;
    std::ostringstream out, err;
    const int code =
        run_cli({"closure", "4", "2", "1,3,6", "2,4,6"}, out, err);
    ok = ok && code == 0 && out.str() == "[[1,2,3,4,6]]\n";

    const Params p(4, 2);
    const Collection want(p, {AdmissibleSet(p, {1, 2, 3, 4, 6})});
    const auto sub = subcategory_of(want);
    ok = ok && sub.size() == 10;
    const std::set<std::vector<int>> expect = {{1, 2, 3}, {1, 2, 4}, {1, 2, 6}, {1, 3, 4},
                                               {1, 3, 6}, {1, 4, 6}, {2, 3, 4}, {2, 3, 6},
                                               {2, 4, 6}, {3, 4, 6}};
    std::set<std::vector<int>> got;
    for (const IncTuple& t : sub)
        got.insert(t.entries);
    ok = ok && got == expect;

    const auto back = recognize_wide(p, sub);
    ok = ok && back.has_value() && *back == want;

    report(6, "worked example closure/recognize", ok,
           "closure 4 2 1,3,6 2,4,6 -> [[1,2,3,4,6]], 10 indecomposables");
}

void criterion_7_bijection()
{
    const Params p(3, 2);
    std::uint64_t len = 0, bad = 0;
    std::set<std::vector<std::vector<int>>> distinct;
    std::set<std::set<std::vector<int>>> distinct_subs;
    enumerate_collections(p, [&](const Collection& c) {
        ++len;
        std::vector<std::vector<int>> key;
        for (const AdmissibleSet& s : c.members)
            key.push_back(s.members);
        distinct.insert(key);
        const auto sub = subcategory_of(c);
        std::set<std::vector<int>> skey;
        for (const IncTuple& t : sub)
            skey.insert(t.entries);
        distinct_subs.insert(skey);
        const auto back = recognize_wide(p, sub);
        if (!back || !(*back == c))
            ++bad;
    });
    const bool ok = len == 47 && distinct.size() == 47 && distinct_subs.size() == 47 &&
                    bad == 0 && count_wide(p).to_string() == "47";
    std::ostringstream detail;
    detail << len << " collections, " << distinct_subs.size()
           << " distinct subcategories, " << bad << " round-trip failures";
    report(7, "bijection round-trip at (3,2)", ok, detail.str());
}

void criterion_8_properties()
{
    bool ok = true;
    std::string what;

    // greedy interlacing test against brute force over tuple families
    std::uint64_t pairs = 0;
    for (const Params p : {Params(3, 1), Params(4, 1), Params(3, 2), Params(2, 3)}) {
        const int g = p.ground_size();
        std::vector<AdmissibleSet> sets;
        for (unsigned m = 0; m < (1u << g); ++m) {
            std::vector<int> mem;
            for (int b = 0; b < g; ++b)
                if (m >> b & 1)
                    mem.push_back(b + 1);
            if (static_cast<int>(mem.size()) >= p.d + 1)
                sets.emplace_back(p, std::move(mem));
        }
        for (const auto& s : sets) {
            for (const auto& t : sets) {
                ++pairs;
                bool brute = false;
                for (const IncTuple& x : tuples_of_set(s)) {
                    for (const IncTuple& y : tuples_of_set(t)) {
                        if (tuples_interlace(x, y)) {
                            brute = true;
                            break;
                        }
                    }
                    if (brute)
                        break;
                }
                if (sets_interlace(s, t) != brute) {
                    ok = false;
                    what = "sets_interlace grid";
                }
            }
        }
    }

    // merge-order independence of the closure, 100 shuffled orders
    const Params p42(4, 2);
    const auto ts = generate_tuples(p42.category_space());
    std::mt19937 rng(20260808);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::vector<IncTuple> xs;
        const std::size_t count = 1 + rng() % 4;
        for (std::size_t i = 0; i < count; ++i)
            xs.push_back(ts[rng() % ts.size()]);
        const Collection fixed = wide_closure(p42, xs);

        // random merge order via public operations
        std::vector<AdmissibleSet> cur;
        for (const IncTuple& x : xs) {
            AdmissibleSet s = tuple_support_set(p42, x);
            if (std::find(cur.begin(), cur.end(), s) == cur.end())
                cur.push_back(std::move(s));
        }
        for (;;) {
            std::vector<std::pair<std::size_t, std::size_t>> cand;
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i + 1; j < cur.size(); ++j)
                    if (sets_interlace(cur[i], cur[j]))
                        cand.emplace_back(i, j);
            if (cand.empty())
                break;
            const auto [i, j] = cand[rng() % cand.size()];
            std::vector<int> u = cur[i].members;
            u.insert(u.end(), cur[j].members.begin(), cur[j].members.end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            AdmissibleSet merged(p42, std::move(u));
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
            if (std::find(cur.begin(), cur.end(), merged) == cur.end())
                cur.push_back(std::move(merged));
        }
        if (!(Collection(p42, cur) == fixed)) {
            ok = false;
            what = "closure merge order";
        }
    }

    // witnesses and extension middle terms lie in the closure, exhaustively
    std::uint64_t containments = 0;
    for (const IncTuple& x : ts) {
        for (const IncTuple& y : ts) {
            if (!ok)
                break;
            if (e_hom(x, y)) {
                const auto sub = subcategory_of(wide_closure(p42, {x, y}));
                for (int k = 1; k <= 2; ++k) {
                    if (const auto w = kernel_witness(x, y, k)) {
                        ++containments;
                        if (!std::binary_search(sub.begin(), sub.end(), *w)) {
                            ok = false;
                            what = "kernel witness containment";
                        }
                    }
                }
                for (int k = 0; k <= 1; ++k) {
                    if (const auto w = cokernel_witness(x, y, k)) {
                        ++containments;
                        if (!std::binary_search(sub.begin(), sub.end(), *w)) {
                            ok = false;
                            what = "cokernel witness containment";
                        }
                    }
                }
            }
            if (e_ext(x, y)) {
                const auto sub = subcategory_of(wide_closure(p42, {x, y}));
                for (unsigned mask = 0; mask < 8u; ++mask) {
                    std::vector<int> ze(3);
                    bool valid = true;
                    for (int i = 0; i <= 2 && valid; ++i) {
                        ze[static_cast<std::size_t>(i)] = (mask >> i & 1) ? y[i] : x[i];
                        if (i > 0 && ze[static_cast<std::size_t>(i - 1)] >=
                                          ze[static_cast<std::size_t>(i)])
                            valid = false;
                    }
                    if (!valid)
                        continue;
                    ++containments;
                    const IncTuple z(p42.category_space(), ze);
                    if (!std::binary_search(sub.begin(), sub.end(), z)) {
                        ok = false;
                        what = "extension middle containment";
                    }
                }
            }
        }
    }

    std::ostringstream detail;
    if (ok)
        detail << pairs << " interlacing pairs, 100 shuffles, " << containments
               << " containments";
    else
        detail << "failed: " << what;
    report(8, "property suite", ok, detail.str());
}

} // namespace

int main()
{
    criterion_1_table();
    criterion_2_stretch();
    criteria_3_4_oracles();
    criterion_5_exactness();
    criterion_6_worked_example();
    criterion_7_bijection();
    criterion_8_properties();
    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria failed\n";
    return failures;
}
