#pragma once

// Wide subcategories of M_{n,d}: collections of admissible sets, the
// non-interlacing condition, wide closure of a set of indecomposables,
// recognition, the relabeling equivalence onto a block, and counting /
// enumeration of all wide subcategories as independent sets of the
// interlacing graph.

#include "widecat/bigint.hpp"
#include "widecat/bitset.hpp"
#include "widecat/tuples.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace widecat {

struct Collection {
    Params params;
    std::vector<AdmissibleSet> members; // sorted lexicographically, distinct

    Collection() = default;
    Collection(Params p, std::vector<AdmissibleSet> m); // sorts, dedupes, validates

    bool operator==(const Collection& o) const = default;
};

// All subsets of {1,...,n+d} of size >= d+1, ordered by (size, members).
std::vector<AdmissibleSet> admissible_sets(Params params);

bool is_noninterlacing(const Collection& c);

// Union of X_S over the members, sorted; throws on an interlacing
// collection (the union is disjoint for non-interlacing ones).
std::vector<IncTuple> subcategory_of(const Collection& c);

// Smallest non-interlacing collection whose subcategory contains the given
// tuples: start from their support sets and merge interlacing members until
// a fixed point.  The result is independent of the merge order.
Collection wide_closure(Params params, const std::vector<IncTuple>& xs);

// If xs is exactly the subcategory of a non-interlacing collection, return
// that collection (the maximal admissible sets S with X_S inside xs);
// otherwise nullopt.
std::optional<Collection> recognize_wide(Params params, const std::vector<IncTuple>& xs);

// The unique order-preserving relabeling of V_{|S|-d,d} into X_S.
IncTuple relabel(const AdmissibleSet& s, const IncTuple& x_prime);

// Admissible sets as vertices, edges between interlacing pairs.
struct InterlaceGraph {
    Params params;
    std::vector<AdmissibleSet> sets;
    std::vector<DynBitset> adj;

    std::size_t size() const { return sets.size(); }
};

InterlaceGraph build_interlace_graph(Params params);

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

struct CapExceeded : std::runtime_error {
    CapExceeded() : std::runtime_error("enumeration cap exceeded") {}
};

struct CountOptions {
    std::optional<double> budget_secs;
    int jobs = 1;
};

struct CountStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Number of independent sets (the empty one included), by branching on a
// maximum-degree vertex with connected-component factorization and
// memoization on residual vertex sets.
BigUint count_independent_sets(const InterlaceGraph& g, const CountOptions& opts = {},
                               CountStats* stats = nullptr);

// w_{n,d}: the number of wide subcategories of M_{n,d}.
BigUint count_wide(Params params, const CountOptions& opts = {}, CountStats* stats = nullptr);

// Emits every non-interlacing collection exactly once in a deterministic
// DFS order (the empty collection first).  Throws CapExceeded when more
// than cap collections would be emitted.
void enumerate_collections(Params params, const std::function<void(const Collection&)>& emit,
                           std::optional<std::uint64_t> cap = std::nullopt);

// Independently known values of w_{n,d}: 2 for n = 1, the Catalan closed
// form for d = 1, the A001612 recurrence for n = 2, table lookup otherwise;
// nullopt when no independent value is available.
std::optional<BigUint> reference_count(Params params);

} // namespace widecat
