#pragma once

// Combinatorial core for the categories M_{n,d}: the tuple lattice V_{n,m},
// single-coordinate shifts, the E_Hom / E_Ext interleaving relations,
// interlacing of tuples and of admissible sets, and the kernel/cokernel
// witness formulas.
//
// Two tuple spaces occur side by side.  Indecomposables of M_{n,d} are
// indexed by V_{n,d} (length d+1), while the quiver the modules live over
// has vertex set V_{n,d-1}.  Tuples therefore carry their space and
// operations refuse to mix spaces.

#include <optional>
#include <string>
#include <vector>

namespace widecat {

// The space V_{n,m}: strictly increasing (m+1)-tuples over {1,...,n+m}.
struct TupleSpace {
    int n = 1;
    int m = 0;

    int ground_size() const { return n + m; }
    int tuple_len() const { return m + 1; }
    bool operator==(const TupleSpace&) const = default;
};

// Category-level parameters.  n >= 1, d >= 1.
struct Params {
    int n = 1;
    int d = 1;

    Params() = default;
    Params(int n_, int d_);

    int ground_size() const { return n + d; }
    TupleSpace category_space() const { return {n, d}; }
    TupleSpace module_space() const { return {n, d - 1}; }
    bool operator==(const Params&) const = default;
};

struct IncTuple {
    TupleSpace space;
    std::vector<int> entries;

    IncTuple() = default;
    IncTuple(TupleSpace s, std::vector<int> e); // validates the invariant

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

    // Entry set as a bitmask, bit v-1 for entry v.
    std::uint32_t entry_mask() const;

    bool operator==(const IncTuple& o) const = default;
    // Lexicographic on entries; comparing across spaces is a caller bug
    // guarded by the callers, not here.
    bool operator<(const IncTuple& o) const { return entries < o.entries; }
};

// A subset S of {1,...,n+d} with |S| >= d+1.
struct AdmissibleSet {
    Params params;
    std::vector<int> members; // sorted ascending

    AdmissibleSet() = default;
    AdmissibleSet(Params p, std::vector<int> m); // sorts and validates

    int size() const { return static_cast<int>(members.size()); }
    std::uint32_t mask() const;

    bool operator==(const AdmissibleSet& o) const = default;
    bool operator<(const AdmissibleSet& o) const { return members < o.members; }
};

// All of V_{n,m} in lexicographic order; |result| = C(n+m, m+1).
std::vector<IncTuple> generate_tuples(TupleSpace space);

std::uint64_t binomial(int n, int k);

// x with x_k shifted by dir (+1 or -1) when the result is still a valid
// tuple of the same space, nullopt otherwise.
std::optional<IncTuple> sigma(const IncTuple& x, int k, int dir);

// x_0 <= y_0 < x_1 <= y_1 < ... < x_m <= y_m
bool e_hom(const IncTuple& x, const IncTuple& y);
// x_0 < y_0 <= x_1 < y_1 <= ... <= x_m < y_m
bool e_ext(const IncTuple& x, const IncTuple& y);
bool tuples_interlace(const IncTuple& x, const IncTuple& y);

// X_S: all increasing (d+1)-tuples with entries in S, lexicographic order.
std::vector<IncTuple> tuples_of_set(const AdmissibleSet& s);

// S_x as an admissible set of the ambient Params (only valid for tuples of
// the category space, where |S_x| = d+1).
AdmissibleSet tuple_support_set(Params params, const IncTuple& x);

// Whether some x in X_S and y in X_S' interlace.  Decided by a greedy
// alternating scan over the two member lists; agrees with brute force over
// X_S x X_S' (property-tested).
bool sets_interlace(const AdmissibleSet& s, const AdmissibleSet& t);

// Mask-level core of sets_interlace, shared with the interlacing graph
// builder.  Masks encode subsets of {1,...,ground} with bit v-1 for v.
bool sets_interlace_masks(std::uint32_t s, std::uint32_t t, int d);

// Witness formulas for the first kernel / cokernel term of a nonzero
// morphism M_x -> M_y (requires e_hom(x, y)).
// kernel: if x_{k-1} < y_{k-1} < x_k, x with x_k replaced by y_{k-1}.
std::optional<IncTuple> kernel_witness(const IncTuple& x, const IncTuple& y, int k);
// cokernel: if y_k < x_{k+1} < y_{k+1}, y with y_k replaced by x_{k+1}.
std::optional<IncTuple> cokernel_witness(const IncTuple& x, const IncTuple& y, int k);

// Text syntax.  Tuples are comma-separated integers ("1,3,6"); sets accept
// both "{1,2,3,4,6}" and the range shorthand "1-4,6".
IncTuple parse_tuple(const std::string& text, TupleSpace space);
std::string format_tuple(const IncTuple& x);
AdmissibleSet parse_set(const std::string& text, Params params);
std::string format_set(const AdmissibleSet& s);

namespace detail {
void require_same_space(const IncTuple& x, const IncTuple& y);
void require_same_params(const AdmissibleSet& s, const AdmissibleSet& t);
} // namespace detail

} // namespace widecat
