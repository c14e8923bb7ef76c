#include "widecat/reps.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace widecat {

ModuleCategory::ModuleCategory(Params params, std::uint32_t p)
    : params_(params), p_(p), quiver_(build_quiver(params.module_space()))
{
    if (!is_prime_u32(p) || p >= (std::uint32_t{1} << 31))
        throw std::invalid_argument("field characteristic must be a prime below 2^31");
}

int ModuleCategory::vertex_index(const IncTuple& v) const
{
    const int i = quiver_.vertex_index(v);
    if (i < 0)
        throw std::invalid_argument("tuple is not a vertex of the module quiver");
    return i;
}

void ModuleCategory::require_category_tuple(const IncTuple& x) const
{
    if (!(x.space == params_.category_space()))
        throw std::invalid_argument("tuple does not live in the category space of this context");
}

int Representation::total_dim() const
{
    int t = 0;
    for (int d : dims)
        t += d;
    return t;
}

bool Representation::satisfies_relations() const
{
    const QuiverPresentation& q = cat->module_quiver();
    // arrow lookup by (src, coord)
    auto find_arrow = [&](int src, int coord) -> int {
        for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai)
            if (q.arrows[static_cast<std::size_t>(ai)].src == src &&
                q.arrows[static_cast<std::size_t>(ai)].coord == coord)
                return ai;
        return -1;
    };
    for (const Relation& r : q.relations) {
        const auto path = [&](int first, int second) -> std::optional<FieldMatrix> {
            const int a1 = find_arrow(r.base, first);
            if (a1 < 0)
                return std::nullopt;
            const Arrow& arr1 = q.arrows[static_cast<std::size_t>(a1)];
            const int a2 = find_arrow(arr1.dst, second);
            if (a2 < 0)
                return std::nullopt;
            // maps run against the arrows: arrow_maps[a1] : space(dst1) -> space(x)
            return arrow_maps[static_cast<std::size_t>(a1)].mul(
                arrow_maps[static_cast<std::size_t>(a2)]);
        };
        const auto pk = path(r.k, r.l);
        const auto pl = path(r.l, r.k);
        if (r.kind == RelationKind::commutativity) {
            if (!pk || !pl || !(*pk == *pl))
                return false;
        } else {
            if (pk && !pk->is_zero())
                return false;
            if (pl && !pl->is_zero())
                return false;
        }
    }
    return true;
}

bool RepMorphism::is_zero() const
{
    for (const FieldMatrix& m : vertex_maps)
        if (!m.is_zero())
            return false;
    return true;
}

RepMorphism compose(const RepMorphism& f, const RepMorphism& g)
{
    if (f.cat != g.cat)
        throw std::invalid_argument("morphisms belong to different contexts");
    RepMorphism h;
    h.cat = f.cat;
    h.vertex_maps.reserve(f.vertex_maps.size());
    for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
        h.vertex_maps.push_back(g.vertex_maps[v].mul(f.vertex_maps[v]));
    return h;
}

bool commutes(const Representation& src, const Representation& tgt, const RepMorphism& phi)
{
    const QuiverPresentation& q = src.cat->module_quiver();
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        const FieldMatrix lhs =
            phi.vertex_maps[static_cast<std::size_t>(a.src)].mul(src.arrow_maps[ai]);
        const FieldMatrix rhs =
            tgt.arrow_maps[ai].mul(phi.vertex_maps[static_cast<std::size_t>(a.dst)]);
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

std::vector<IncTuple> support(const ModuleCategory& cat, const IncTuple& x)
{
    cat.require_category_tuple(x);
    const int d = cat.params().d;
    const TupleSpace mod_space = cat.params().module_space();
    std::vector<IncTuple> out;
    std::vector<int> cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        cur[static_cast<std::size_t>(i)] = x[i];
    for (;;) {
        out.emplace_back(mod_space, cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] + 1 >= x[i + 1])
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            cur[static_cast<std::size_t>(j)] = x[j];
    }
    return out;
}

namespace {

std::vector<char> support_flags(const ModuleCategory& cat, const IncTuple& x)
{
    std::vector<char> in(static_cast<std::size_t>(cat.vertex_count()), 0);
    for (const IncTuple& v : support(cat, x))
        in[static_cast<std::size_t>(cat.vertex_index(v))] = 1;
    return in;
}

} // namespace

Representation build_module(const ModuleCategory& cat, const IncTuple& x)
{
    return direct_sum(cat, {x});
}

Representation direct_sum(const ModuleCategory& cat, const std::vector<IncTuple>& summands)
{
    const QuiverPresentation& q = cat.module_quiver();
    const std::uint32_t p = cat.characteristic();
    Representation rep;
    rep.cat = &cat;
    rep.dims.assign(static_cast<std::size_t>(cat.vertex_count()), 0);

    std::vector<std::vector<char>> in;
    in.reserve(summands.size());
    for (const IncTuple& z : summands) {
        in.push_back(support_flags(cat, z));
        for (std::size_t v = 0; v < in.back().size(); ++v)
            rep.dims[v] += in.back()[v];
    }

    // block offset of summand j at vertex v
    auto offset = [&](std::size_t j, std::size_t v) {
        int off = 0;
        for (std::size_t jj = 0; jj < j; ++jj)
            off += in[jj][v];
        return off;
    };

    rep.arrow_maps.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) {
        const auto sv = static_cast<std::size_t>(a.src);
        const auto dv = static_cast<std::size_t>(a.dst);
        FieldMatrix m(static_cast<std::size_t>(rep.dims[sv]),
                      static_cast<std::size_t>(rep.dims[dv]), p);
        for (std::size_t j = 0; j < summands.size(); ++j)
            if (in[j][sv] && in[j][dv])
                m.at(static_cast<std::size_t>(offset(j, sv)),
                     static_cast<std::size_t>(offset(j, dv))) = 1;
        rep.arrow_maps.push_back(std::move(m));
    }
    return rep;
}

RepMorphism canonical_hom(const ModuleCategory& cat, const IncTuple& x, const IncTuple& y)
{
    cat.require_category_tuple(x);
    cat.require_category_tuple(y);
    const bool nonzero = e_hom(x, y);
    const auto in_x = support_flags(cat, x);
    const auto in_y = support_flags(cat, y);
    const std::uint32_t p = cat.characteristic();

    RepMorphism phi;
    phi.cat = &cat;
    phi.vertex_maps.reserve(in_x.size());
    for (std::size_t v = 0; v < in_x.size(); ++v) {
        FieldMatrix m(static_cast<std::size_t>(in_y[v]), static_cast<std::size_t>(in_x[v]), p);
        if (nonzero && in_x[v] && in_y[v])
            m.at(0, 0) = 1;
        phi.vertex_maps.push_back(std::move(m));
    }
    return phi;
}

namespace {

// Morphism between direct sums assembled from scalar block coefficients:
// coeff(i, j) multiplies the canonical morphism src[i] -> dst[j].
RepMorphism assemble_map(const ModuleCategory& cat, const std::vector<IncTuple>& src,
                         const std::vector<IncTuple>& dst,
                         const std::vector<std::vector<std::uint32_t>>& coeff)
{
    const std::uint32_t p = cat.characteristic();
    const std::size_t nv = static_cast<std::size_t>(cat.vertex_count());

    std::vector<std::vector<char>> in_src, in_dst;
    for (const IncTuple& z : src)
        in_src.push_back(support_flags(cat, z));
    for (const IncTuple& z : dst)
        in_dst.push_back(support_flags(cat, z));

    RepMorphism phi;
    phi.cat = &cat;
    phi.vertex_maps.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t rows = 0, cols = 0;
        for (const auto& f : in_dst)
            rows += static_cast<std::size_t>(f[v]);
        for (const auto& f : in_src)
            cols += static_cast<std::size_t>(f[v]);
        FieldMatrix m(rows, cols, p);
        std::size_t col = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (!in_src[i][v])
                continue;
            std::size_t row = 0;
            for (std::size_t j = 0; j < dst.size(); ++j) {
                if (!in_dst[j][v])
                    continue;
                if (coeff[i][j] != 0)
                    m.at(row, col) = coeff[i][j];
                ++row;
            }
            ++col;
        }
        phi.vertex_maps.push_back(std::move(m));
    }
    return phi;
}

} // namespace

RepComplex ext_sequence(const ModuleCategory& cat, const IncTuple& x, const IncTuple& y)
{
    cat.require_category_tuple(x);
    cat.require_category_tuple(y);
    if (!e_ext(x, y))
        throw std::invalid_argument("ext_sequence requires e_ext(x, y)");
    const int d = cat.params().d;
    const TupleSpace space = cat.params().category_space();

    // Middle terms: z with z_i in {x_i, y_i}, graded by how many coordinates
    // come from x (d+1 for x itself down to 0 for y).
    std::vector<std::vector<IncTuple>> by_level(static_cast<std::size_t>(d + 2));
    std::vector<std::vector<std::uint32_t>> level_mask(static_cast<std::size_t>(d + 2));
    for (std::uint32_t choose_y = 0; choose_y < (std::uint32_t{1} << (d + 1)); ++choose_y) {
        std::vector<int> entries(static_cast<std::size_t>(d + 1));
        bool valid = true;
        for (int i = 0; i <= d && valid; ++i) {
            entries[static_cast<std::size_t>(i)] = (choose_y >> i) & 1 ? y[i] : x[i];
            if (i > 0 && entries[static_cast<std::size_t>(i - 1)] >= entries[static_cast<std::size_t>(i)])
                valid = false;
        }
        if (!valid)
            continue;
        const int from_x = d + 1 - std::popcount(choose_y);
        by_level[static_cast<std::size_t>(from_x)].emplace_back(space, entries);
        level_mask[static_cast<std::size_t>(from_x)].push_back(choose_y);
    }
    for (std::size_t k = 0; k < by_level.size(); ++k) {
        // keep summands lexicographic together with their choice masks
        std::vector<std::size_t> order(by_level[k].size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return by_level[k][a] < by_level[k][b];
        });
        std::vector<IncTuple> ts;
        std::vector<std::uint32_t> ms;
        for (std::size_t i : order) {
            ts.push_back(by_level[k][i]);
            ms.push_back(level_mask[k][i]);
        }
        by_level[k] = std::move(ts);
        level_mask[k] = std::move(ms);
    }

    RepComplex c;
    c.cat = &cat;
    const Fp f(cat.characteristic());
    // positions left to right: level d+1 ({x}), d, ..., 1, 0 ({y})
    for (int k = d + 1; k >= 0; --k) {
        c.terms.push_back(by_level[static_cast<std::size_t>(k)]);
        c.term_reps.push_back(direct_sum(cat, c.terms.back()));
    }
    for (int k = d + 1; k >= 1; --k) {
        const auto& src = by_level[static_cast<std::size_t>(k)];
        const auto& src_mask = level_mask[static_cast<std::size_t>(k)];
        const auto& dst = by_level[static_cast<std::size_t>(k - 1)];
        const auto& dst_mask = level_mask[static_cast<std::size_t>(k - 1)];
        std::vector<std::vector<std::uint32_t>> coeff(
            src.size(), std::vector<std::uint32_t>(dst.size(), 0));
        for (std::size_t i = 0; i < src.size(); ++i) {
            for (std::size_t j = 0; j < dst.size(); ++j) {
                const std::uint32_t diff = src_mask[i] ^ dst_mask[j];
                // component present iff exactly one x-coordinate flips to y
                if (std::popcount(diff) != 1 || (src_mask[i] & diff) != 0)
                    continue;
                const int pos = std::countr_zero(diff);
                const int sign_count =
                    std::popcount(~src_mask[i] & ((std::uint32_t{1} << pos) - 1));
                coeff[i][j] = (sign_count % 2 == 0) ? 1 : f.neg(1);
            }
        }
        c.maps.push_back(assemble_map(cat, src, dst, coeff));
    }
    return c;
}

RepComplex resolution(const ModuleCategory& cat, const IncTuple& x, int s)
{
    cat.require_category_tuple(x);
    if (s < 1 || s >= x[0])
        throw std::invalid_argument("resolution requires 1 <= s < x_0");
    const int d = cat.params().d;
    std::vector<int> top(static_cast<std::size_t>(d + 1));
    top[0] = s;
    for (int i = 1; i <= d; ++i)
        top[static_cast<std::size_t>(i)] = x[i - 1];
    RepComplex c = ext_sequence(cat, IncTuple(cat.params().category_space(), top), x);
    if (s == 1)
        c.kind = "minimal projective resolution";
    return c;
}

ProjInj classify_proj_inj(const ModuleCategory& cat, const IncTuple& x)
{
    cat.require_category_tuple(x);
    ProjInj r;
    r.projective = x[0] == 1;
    r.injective = x[cat.params().d] == cat.params().ground_size();
    return r;
}

std::string complex_to_json(const RepComplex& c)
{
    const QuiverPresentation& q = c.cat->module_quiver();
    nlohmann::ordered_json j;
    j["n"] = c.cat->params().n;
    j["d"] = c.cat->params().d;
    j["p"] = c.cat->characteristic();
    if (!c.kind.empty())
        j["kind"] = c.kind;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& term : c.terms) {
        nlohmann::ordered_json jt = nlohmann::ordered_json::array();
        for (const IncTuple& z : term)
            jt.push_back(z.entries);
        j["terms"].push_back(std::move(jt));
    }
    j["maps"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        nlohmann::ordered_json jm;
        jm["from"] = i;
        jm["to"] = i + 1;
        jm["blocks"] = nlohmann::ordered_json::array();
        for (std::size_t v = 0; v < c.maps[i].vertex_maps.size(); ++v) {
            const FieldMatrix& m = c.maps[i].vertex_maps[v];
            if (m.rows() == 0 || m.cols() == 0)
                continue;
            nlohmann::ordered_json jb;
            jb["vertex"] = q.vertices[v].entries;
            jb["rows"] = m.rows();
            jb["cols"] = m.cols();
            std::vector<std::uint32_t> data;
            data.reserve(m.rows() * m.cols());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t cc = 0; cc < m.cols(); ++cc)
                    data.push_back(m.at(r, cc));
            jb["data"] = data;
            jm["blocks"].push_back(std::move(jb));
        }
        j["maps"].push_back(std::move(jm));
    }
    return j.dump();
}

} // namespace widecat
