#include "widecat/tuples.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace widecat {

Params::Params(int n_, int d_) : n(n_), d(d_)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("Params requires n >= 1 and d >= 1");
}

static void validate_space(TupleSpace s)
{
    if (s.n < 1 || s.m < 0)
        throw std::invalid_argument("tuple space requires n >= 1 and m >= 0");
}

IncTuple::IncTuple(TupleSpace s, std::vector<int> e) : space(s), entries(std::move(e))
{
    validate_space(space);
    if (static_cast<int>(entries.size()) != space.tuple_len())
        throw std::invalid_argument("tuple length must be m+1");
    int prev = 0;
    for (int v : entries) {
        if (v <= prev || v > space.ground_size())
            throw std::invalid_argument("tuple entries must be strictly increasing in 1..n+m");
        prev = v;
    }
}

std::uint32_t IncTuple::entry_mask() const
{
    std::uint32_t m = 0;
    for (int v : entries)
        m |= std::uint32_t{1} << (v - 1);
    return m;
}

AdmissibleSet::AdmissibleSet(Params p, std::vector<int> m) : params(p), members(std::move(m))
{
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("admissible set members must be distinct");
    if (static_cast<int>(members.size()) < params.d + 1)
        throw std::invalid_argument("admissible set needs at least d+1 members");
    for (int v : members)
        if (v < 1 || v > params.ground_size())
            throw std::invalid_argument("admissible set member out of range");
}

std::uint32_t AdmissibleSet::mask() const
{
    std::uint32_t m = 0;
    for (int v : members)
        m |= std::uint32_t{1} << (v - 1);
    return m;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<IncTuple> generate_tuples(TupleSpace space)
{
    validate_space(space);
    const int len = space.tuple_len();
    const int top = space.ground_size();
    std::vector<IncTuple> out;
    out.reserve(binomial(top, len));
    std::vector<int> cur(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        cur[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        IncTuple t;
        t.space = space;
        t.entries = cur;
        out.push_back(std::move(t));
        // next combination in lexicographic order
        int i = len - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == top - (len - 1 - i))
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < len; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace detail {

void require_same_space(const IncTuple& x, const IncTuple& y)
{
    if (!(x.space == y.space))
        throw std::invalid_argument("tuples belong to different spaces");
}

void require_same_params(const AdmissibleSet& s, const AdmissibleSet& t)
{
    if (!(s.params == t.params))
        throw std::invalid_argument("admissible sets belong to different contexts");
}

} // namespace detail

std::optional<IncTuple> sigma(const IncTuple& x, int k, int dir)
{
    if (k < 0 || k > x.space.m)
        throw std::invalid_argument("sigma coordinate out of range");
    if (dir != 1 && dir != -1)
        throw std::invalid_argument("sigma direction must be +1 or -1");
    const int v = x[k] + dir;
    if (v < 1 || v > x.space.ground_size())
        return std::nullopt;
    if (k > 0 && x[k - 1] >= v)
        return std::nullopt;
    if (k < x.space.m && v >= x[k + 1])
        return std::nullopt;
    IncTuple y = x;
    y.entries[static_cast<std::size_t>(k)] = v;
    return y;
}

bool e_hom(const IncTuple& x, const IncTuple& y)
{
    detail::require_same_space(x, y);
    const int m = x.space.m;
    for (int i = 0; i <= m; ++i) {
        if (!(x[i] <= y[i]))
            return false;
        if (i < m && !(y[i] < x[i + 1]))
            return false;
    }
    return true;
}

bool e_ext(const IncTuple& x, const IncTuple& y)
{
    detail::require_same_space(x, y);
    const int m = x.space.m;
    for (int i = 0; i <= m; ++i) {
        if (!(x[i] < y[i]))
            return false;
        if (i < m && !(y[i] <= x[i + 1]))
            return false;
    }
    return true;
}

bool tuples_interlace(const IncTuple& x, const IncTuple& y)
{
    return e_hom(x, y) || e_hom(y, x) || e_ext(x, y) || e_ext(y, x);
}

std::vector<IncTuple> tuples_of_set(const AdmissibleSet& s)
{
    const int len = s.params.d + 1;
    const int sz = s.size();
    std::vector<IncTuple> out;
    out.reserve(binomial(sz, len));
    std::vector<int> idx(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    const TupleSpace space = s.params.category_space();
    for (;;) {
        IncTuple t;
        t.space = space;
        t.entries.resize(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i)
            t.entries[static_cast<std::size_t>(i)] =
                s.members[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        out.push_back(std::move(t));
        int i = len - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == sz - (len - i))
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < len; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

AdmissibleSet tuple_support_set(Params params, const IncTuple& x)
{
    if (!(x.space == params.category_space()))
        throw std::invalid_argument("tuple is not in the category space of these parameters");
    return AdmissibleSet(params, x.entries);
}

namespace {

// Least element of mask with value >= v (1-based), or 0 if none.
inline int least_geq(std::uint32_t mask, int v)
{
    const std::uint32_t m = mask & ~((std::uint32_t{1} << (v - 1)) - 1);
    return m ? std::countr_zero(m) + 1 : 0;
}

// Least element of mask with value > v, or 0 if none.
inline int least_gt(std::uint32_t mask, int v)
{
    const std::uint32_t m = (v >= 32) ? 0 : mask & ~((std::uint32_t{2} << (v - 1)) - 1);
    return m ? std::countr_zero(m) + 1 : 0;
}

// Greedy feasibility of s_0 <= t_0 < s_1 <= t_1 < ... < s_d <= t_d with the
// s_i drawn from S and t_i from T.
bool feasible_hom(std::uint32_t S, std::uint32_t T, int d)
{
    int s = S ? std::countr_zero(S) + 1 : 0;
    if (s == 0)
        return false;
    for (int i = 0;; ++i) {
        const int t = least_geq(T, s);
        if (t == 0)
            return false;
        if (i == d)
            return true;
        s = least_gt(S, t);
        if (s == 0)
            return false;
    }
}

// Greedy feasibility of s_0 < t_0 <= s_1 < t_1 <= ... <= s_d < t_d.
bool feasible_ext(std::uint32_t S, std::uint32_t T, int d)
{
    int s = S ? std::countr_zero(S) + 1 : 0;
    if (s == 0)
        return false;
    for (int i = 0;; ++i) {
        const int t = least_gt(T, s);
        if (t == 0)
            return false;
        if (i == d)
            return true;
        s = least_geq(S, t);
        if (s == 0)
            return false;
    }
}

} // namespace

bool sets_interlace_masks(std::uint32_t s, std::uint32_t t, int d)
{
    return feasible_hom(s, t, d) || feasible_hom(t, s, d) || feasible_ext(s, t, d) ||
           feasible_ext(t, s, d);
}

bool sets_interlace(const AdmissibleSet& s, const AdmissibleSet& t)
{
    detail::require_same_params(s, t);
    return sets_interlace_masks(s.mask(), t.mask(), s.params.d);
}

std::optional<IncTuple> kernel_witness(const IncTuple& x, const IncTuple& y, int k)
{
    detail::require_same_space(x, y);
    if (!e_hom(x, y))
        throw std::invalid_argument("kernel_witness requires e_hom(x, y)");
    const int d = x.space.m;
    if (k < 1 || k > d)
        throw std::invalid_argument("kernel_witness coordinate out of range");
    if (!(x[k - 1] < y[k - 1] && y[k - 1] < x[k]))
        return std::nullopt;
    IncTuple out = x;
    out.entries[static_cast<std::size_t>(k)] = y[k - 1];
    return out;
}

std::optional<IncTuple> cokernel_witness(const IncTuple& x, const IncTuple& y, int k)
{
    detail::require_same_space(x, y);
    if (!e_hom(x, y))
        throw std::invalid_argument("cokernel_witness requires e_hom(x, y)");
    const int d = x.space.m;
    if (k < 0 || k > d - 1)
        throw std::invalid_argument("cokernel_witness coordinate out of range");
    if (!(y[k] < x[k + 1] && x[k + 1] < y[k + 1]))
        return std::nullopt;
    IncTuple out = y;
    out.entries[static_cast<std::size_t>(k)] = x[k + 1];
    return out;
}

IncTuple parse_tuple(const std::string& text, TupleSpace space)
{
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad tuple entry: '" + part + "'");
        }
        if (pos != part.size())
            throw std::invalid_argument("bad tuple entry: '" + part + "'");
        entries.push_back(v);
    }
    return IncTuple(space, std::move(entries));
}

std::string format_tuple(const IncTuple& x)
{
    std::string out;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(x.entries[i]);
    }
    return out;
}

AdmissibleSet parse_set(const std::string& text, Params params)
{
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw std::invalid_argument("unbalanced braces in set literal");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> members;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                std::size_t pos = 0;
                int v = std::stoi(part, &pos);
                if (pos != part.size())
                    throw std::invalid_argument(part);
                members.push_back(v);
            } else {
                const std::string lo_s = part.substr(0, dash);
                const std::string hi_s = part.substr(dash + 1);
                std::size_t lo_pos = 0, hi_pos = 0;
                int lo = std::stoi(lo_s, &lo_pos);
                int hi = std::stoi(hi_s, &hi_pos);
                if (lo_pos != lo_s.size() || hi_pos != hi_s.size() || lo > hi)
                    throw std::invalid_argument(part);
                for (int v = lo; v <= hi; ++v)
                    members.push_back(v);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad set element: '" + part + "'");
        }
    }
    return AdmissibleSet(params, std::move(members));
}

std::string format_set(const AdmissibleSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s.members[i]);
    }
    out += '}';
    return out;
}

} // namespace widecat
