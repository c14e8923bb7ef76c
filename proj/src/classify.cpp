#include "widecat/classify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <map>
#include <set>
#include <unordered_map>

namespace widecat {

Collection::Collection(Params p, std::vector<AdmissibleSet> m) : params(p), members(std::move(m))
{
    for (const AdmissibleSet& s : members)
        if (!(s.params == params))
            throw std::invalid_argument("collection member has mismatched parameters");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

std::vector<AdmissibleSet> admissible_sets(Params params)
{
    const int ground = params.ground_size();
    if (ground > 31)
        throw std::invalid_argument("ground set too large (n+d must be at most 31)");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << ground); ++m)
        if (std::popcount(m) >= params.d + 1)
            masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb)
            return pa < pb;
        // lexicographic on sorted member lists == numeric order of the
        // reversed bit pattern; compare element by element instead
        std::uint32_t x = a, y = b;
        while (x && y) {
            const int ex = std::countr_zero(x), ey = std::countr_zero(y);
            if (ex != ey)
                return ex < ey;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    });
    std::vector<AdmissibleSet> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) {
        std::vector<int> members;
        for (std::uint32_t x = m; x; x &= x - 1)
            members.push_back(std::countr_zero(x) + 1);
        out.emplace_back(params, std::move(members));
    }
    return out;
}

bool is_noninterlacing(const Collection& c)
{
    for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t j = i + 1; j < c.members.size(); ++j)
            if (sets_interlace(c.members[i], c.members[j]))
                return false;
    return true;
}

std::vector<IncTuple> subcategory_of(const Collection& c)
{
    if (!is_noninterlacing(c))
        throw std::invalid_argument("subcategory_of requires a non-interlacing collection");
    std::vector<IncTuple> out;
    for (const AdmissibleSet& s : c.members) {
        auto xs = tuples_of_set(s);
        out.insert(out.end(), xs.begin(), xs.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Collection wide_closure(Params params, const std::vector<IncTuple>& xs)
{
    const int d = params.d;
    std::vector<std::uint32_t> cur;
    for (const IncTuple& x : xs) {
        if (!(x.space == params.category_space()))
            throw std::invalid_argument("tuple does not live in the category space");
        const std::uint32_t m = x.entry_mask();
        if (std::find(cur.begin(), cur.end(), m) == cur.end())
            cur.push_back(m);
    }
    std::sort(cur.begin(), cur.end());

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < cur.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < cur.size() && !merged; ++j) {
                if (!sets_interlace_masks(cur[i], cur[j], d))
                    continue;
                const std::uint32_t u = cur[i] | cur[j];
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
                if (std::find(cur.begin(), cur.end(), u) == cur.end()) {
                    cur.insert(std::upper_bound(cur.begin(), cur.end(), u), u);
                }
                merged = true;
            }
        }
    }

    std::vector<AdmissibleSet> members;
    members.reserve(cur.size());
    for (std::uint32_t m : cur) {
        std::vector<int> ms;
        for (std::uint32_t x = m; x; x &= x - 1)
            ms.push_back(std::countr_zero(x) + 1);
        members.emplace_back(params, std::move(ms));
    }
    return Collection(params, std::move(members));
}

std::optional<Collection> recognize_wide(Params params, const std::vector<IncTuple>& xs)
{
    if (xs.empty())
        return Collection(params, {});
    const int ground = params.ground_size();
    if (ground > 22)
        throw std::invalid_argument("recognize_wide supports n+d up to 22");
    const int d = params.d;

    std::vector<char> present(std::size_t{1} << ground, 0);
    std::size_t distinct = 0;
    for (const IncTuple& x : xs) {
        if (!(x.space == params.category_space()))
            throw std::invalid_argument("tuple does not live in the category space");
        if (!present[x.entry_mask()]) {
            present[x.entry_mask()] = 1;
            ++distinct;
        }
    }

    // closed[S]: every (d+1)-subset of S is one of the given tuples.  For
    // |S| >= d+2 this holds iff all maximal proper subsets are closed.
    std::vector<char> closed(std::size_t{1} << ground, 0);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(ground + 1));
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << ground); ++m)
        by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    for (std::uint32_t m : by_size[static_cast<std::size_t>(d + 1)])
        closed[m] = present[m];
    for (int sz = d + 2; sz <= ground; ++sz) {
        for (std::uint32_t m : by_size[static_cast<std::size_t>(sz)]) {
            char ok = 1;
            for (std::uint32_t x = m; x && ok; x &= x - 1)
                ok = closed[m ^ (x & ~(x - 1))];
            closed[m] = ok;
        }
    }

    std::vector<std::uint32_t> maximal;
    for (int sz = d + 1; sz <= ground; ++sz) {
        for (std::uint32_t m : by_size[static_cast<std::size_t>(sz)]) {
            if (!closed[m])
                continue;
            bool is_max = true;
            for (int b = 0; b < ground && is_max; ++b)
                if (!(m >> b & 1) && closed[m | (std::uint32_t{1} << b)])
                    is_max = false;
            if (is_max)
                maximal.push_back(m);
        }
    }

    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (sets_interlace_masks(maximal[i], maximal[j], d))
                return std::nullopt;

    std::vector<AdmissibleSet> members;
    for (std::uint32_t m : maximal) {
        std::vector<int> ms;
        for (std::uint32_t x = m; x; x &= x - 1)
            ms.push_back(std::countr_zero(x) + 1);
        members.emplace_back(params, std::move(ms));
    }
    Collection sigma(params, std::move(members));

    // The members' tuple families must tile xs exactly.
    std::size_t covered = 0;
    for (const AdmissibleSet& s : sigma.members) {
        for (const IncTuple& t : tuples_of_set(s)) {
            if (!present[t.entry_mask()])
                return std::nullopt;
            ++covered;
        }
    }
    if (covered != distinct)
        return std::nullopt;
    return sigma;
}

IncTuple relabel(const AdmissibleSet& s, const IncTuple& x_prime)
{
    const int n_prime = s.size() - s.params.d;
    if (!(x_prime.space == TupleSpace{n_prime, s.params.d}))
        throw std::invalid_argument("tuple does not live in V_{|S|-d, d}");
    std::vector<int> entries;
    entries.reserve(x_prime.entries.size());
    for (int v : x_prime.entries)
        entries.push_back(s.members[static_cast<std::size_t>(v - 1)]);
    return IncTuple(s.params.category_space(), std::move(entries));
}

InterlaceGraph build_interlace_graph(Params params)
{
    InterlaceGraph g;
    g.params = params;
    g.sets = admissible_sets(params);
    const std::size_t n = g.sets.size();
    std::vector<std::uint32_t> masks(n);
    for (std::size_t i = 0; i < n; ++i)
        masks[i] = g.sets[i].mask();
    g.adj.assign(n, DynBitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sets_interlace_masks(masks[i], masks[j], params.d)) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
        }
    }
    return g;
}

namespace {

using Clock = std::chrono::steady_clock;

struct CountContext {
    const InterlaceGraph* g;
    std::optional<Clock::time_point> deadline;
    int spawn_levels = 0;
    std::atomic<std::uint64_t> nodes{0};

    static constexpr std::size_t kMemoCap = 1u << 21;
};

using Memo = std::unordered_map<DynBitset, BigUint, DynBitsetHash>;

// Connected components of the induced subgraph on the residual set.
std::vector<DynBitset> split_components(const InterlaceGraph& g, const DynBitset& residual)
{
    std::vector<DynBitset> comps;
    DynBitset remaining = residual;
    while (remaining.any()) {
        const std::size_t seed = remaining.find_first();
        DynBitset comp(residual.size());
        comp.set(seed);
        DynBitset frontier(residual.size());
        frontier.set(seed);
        while (frontier.any()) {
            DynBitset next(residual.size());
            frontier.for_each_set([&](std::size_t v) { next |= g.adj[v]; });
            next &= remaining;
            next.andnot_assign(comp);
            comp |= next;
            frontier = std::move(next);
        }
        remaining.andnot_assign(comp);
        comps.push_back(std::move(comp));
    }
    return comps;
}

BigUint count_rec(CountContext& ctx, const DynBitset& residual, int depth, Memo& memo);

BigUint count_component(CountContext& ctx, const DynBitset& comp, int depth, Memo& memo)
{
    const auto it = memo.find(comp);
    if (it != memo.end())
        return it->second;

    // branch on a maximum-degree vertex (lowest index breaks ties)
    std::size_t best = comp.find_first();
    std::size_t best_deg = 0;
    comp.for_each_set([&](std::size_t v) {
        const std::size_t deg = ctx.g->adj[v].count_and(comp);
        if (deg > best_deg) {
            best_deg = deg;
            best = v;
        }
    });

    DynBitset without = comp;
    without.reset(best);
    DynBitset closed = without;
    closed.andnot_assign(ctx.g->adj[best]);

    BigUint result;
    if (depth < ctx.spawn_levels) {
        auto fut = std::async(std::launch::async, [&]() {
            Memo local;
            return count_rec(ctx, closed, depth + 1, local);
        });
        const BigUint ex = count_rec(ctx, without, depth + 1, memo);
        result = fut.get() + ex;
    } else {
        result = count_rec(ctx, closed, depth + 1, memo) + count_rec(ctx, without, depth + 1, memo);
    }

    if (memo.size() < CountContext::kMemoCap)
        memo.emplace(comp, result);
    return result;
}

BigUint count_rec(CountContext& ctx, const DynBitset& residual, int depth, Memo& memo)
{
    ctx.nodes.fetch_add(1, std::memory_order_relaxed);
    if (ctx.deadline && Clock::now() > *ctx.deadline)
        throw BudgetExceeded();

    if (residual.none())
        return BigUint(1);

    auto comps = split_components(*ctx.g, residual);
    if (comps.size() == 1)
        return count_component(ctx, comps.front(), depth, memo);
    BigUint result(1);
    for (const DynBitset& comp : comps)
        result *= count_component(ctx, comp, depth, memo);
    return result;
}

} // namespace

BigUint count_independent_sets(const InterlaceGraph& g, const CountOptions& opts, CountStats* stats)
{
    CountContext ctx;
    ctx.g = &g;
    if (opts.budget_secs)
        ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*opts.budget_secs));
    if (opts.jobs > 1) {
        int levels = 0;
        while ((1 << levels) < opts.jobs)
            ++levels;
        ctx.spawn_levels = levels + 1;
    }

    const auto t0 = Clock::now();
    DynBitset all(g.size());
    all.set_first_n(g.size());
    Memo memo;
    BigUint result = count_rec(ctx, all, 0, memo);
    if (stats) {
        stats->nodes = ctx.nodes.load();
        stats->seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    return result;
}

BigUint count_wide(Params params, const CountOptions& opts, CountStats* stats)
{
    const InterlaceGraph g = build_interlace_graph(params);
    return count_independent_sets(g, opts, stats);
}

void enumerate_collections(Params params, const std::function<void(const Collection&)>& emit,
                           std::optional<std::uint64_t> cap)
{
    const InterlaceGraph g = build_interlace_graph(params);
    const std::size_t n = g.size();
    std::uint64_t emitted = 0;
    std::vector<std::size_t> chosen;

    const auto emit_current = [&]() {
        if (cap && emitted >= *cap)
            throw CapExceeded();
        std::vector<AdmissibleSet> members;
        members.reserve(chosen.size());
        for (std::size_t i : chosen)
            members.push_back(g.sets[i]);
        emit(Collection(params, std::move(members)));
        ++emitted;
    };

    DynBitset allowed(n);
    allowed.set_first_n(n);

    // Pre-order DFS over increasing vertex indices: every independent set is
    // visited exactly once.
    const std::function<void(std::size_t, const DynBitset&)> walk =
        [&](std::size_t start, const DynBitset& ok) {
            for (std::size_t v = start; v < n; ++v) {
                if (!ok.test(v))
                    continue;
                chosen.push_back(v);
                emit_current();
                DynBitset next = ok;
                next.andnot_assign(g.adj[v]);
                walk(v + 1, next);
                chosen.pop_back();
            }
        };

    emit_current(); // the empty collection
    walk(0, allowed);
}

std::optional<BigUint> reference_count(Params params)
{
    if (params.n == 1)
        return BigUint(2);
    if (params.d == 1) {
        // Catalan number C_{n+1} = binom(2n+2, n+1) / (n+2)
        BigUint c(1);
        const int k = params.n + 1;
        for (int i = 1; i <= k; ++i) {
            c.mul_u32(static_cast<std::uint32_t>(k + i));
            c.divexact_u32(static_cast<std::uint32_t>(i));
        }
        c.divexact_u32(static_cast<std::uint32_t>(params.n + 2));
        return c;
    }
    if (params.n == 2) {
        // w_{2,d} = w_{2,d-1} + w_{2,d-2} - 1 with w_{2,1} = 5, w_{2,2} = 8;
        // computed as (a - 1) + (b - 1) + 1 to stay in unsigned arithmetic
        std::uint64_t a = 5, b = 8;
        if (params.d == 1)
            return BigUint(a);
        for (int i = 3; i <= params.d; ++i) {
            const std::uint64_t next = a + b - 1;
            a = b;
            b = next;
        }
        return BigUint(b);
    }
    static const std::map<std::pair<int, int>, const char*> table = {
        {{3, 2}, "47"},      {{4, 2}, "374"},      {{5, 2}, "4083"},
        {{6, 2}, "62824"},   {{7, 2}, "1376012"},  {{8, 2}, "42579642"},
        {{3, 3}, "237"},     {{4, 3}, "16830"},    {{5, 3}, "4597078"},
        {{3, 4}, "1724"},    {{4, 4}, "3499884"},  {{3, 5}, "17934"},
        {{3, 6}, "273092"},  {{3, 7}, "5732137"},
    };
    const auto it = table.find({params.n, params.d});
    if (it == table.end())
        return std::nullopt;
    return BigUint::from_decimal(it->second);
}

} // namespace widecat
