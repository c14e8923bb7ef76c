#include "widecat/homology.hpp"

#include <stdexcept>

namespace widecat {

std::vector<std::uint32_t> HomSpace::vectorize(const RepMorphism& phi) const
{
    std::vector<std::uint32_t> v(static_cast<std::size_t>(basis_vectors.cols()), 0);
    for (const Block& b : layout) {
        const FieldMatrix& m = phi.vertex_maps[static_cast<std::size_t>(b.vertex)];
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c)
                v[b.offset + r * b.cols + c] = m.at(r, c);
    }
    return v;
}

HomSpace solve_hom(const Representation& src, const Representation& tgt)
{
    if (src.cat != tgt.cat)
        throw std::invalid_argument("representations belong to different contexts");
    const ModuleCategory& cat = *src.cat;
    const QuiverPresentation& q = cat.module_quiver();
    const std::uint32_t p = cat.characteristic();
    const Fp f(p);

    HomSpace hs;
    std::size_t unknowns = 0;
    std::vector<std::size_t> block_of_vertex(static_cast<std::size_t>(cat.vertex_count()),
                                             static_cast<std::size_t>(-1));
    for (int v = 0; v < cat.vertex_count(); ++v) {
        const std::size_t rows = static_cast<std::size_t>(tgt.dims[static_cast<std::size_t>(v)]);
        const std::size_t cols = static_cast<std::size_t>(src.dims[static_cast<std::size_t>(v)]);
        if (rows == 0 || cols == 0)
            continue;
        block_of_vertex[static_cast<std::size_t>(v)] = hs.layout.size();
        hs.layout.push_back({v, rows, cols, unknowns});
        unknowns += rows * cols;
    }

    // Equations: for each arrow a : v -> w,
    //   phi_v . src_a - tgt_a . phi_w = 0   (a map src(w) -> tgt(v)).
    std::size_t eqs = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        eqs += static_cast<std::size_t>(tgt.dims[static_cast<std::size_t>(a.src)]) *
               static_cast<std::size_t>(src.dims[static_cast<std::size_t>(a.dst)]);
    }

    FieldMatrix sys(eqs, unknowns, p);
    std::size_t e = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        const auto v = static_cast<std::size_t>(a.src);
        const auto w = static_cast<std::size_t>(a.dst);
        const FieldMatrix& src_a = src.arrow_maps[ai]; // src(w) -> src(v)
        const FieldMatrix& tgt_a = tgt.arrow_maps[ai]; // tgt(w) -> tgt(v)
        const std::size_t ty_v = static_cast<std::size_t>(tgt.dims[v]);
        const std::size_t tx_v = static_cast<std::size_t>(src.dims[v]);
        const std::size_t ty_w = static_cast<std::size_t>(tgt.dims[w]);
        const std::size_t tx_w = static_cast<std::size_t>(src.dims[w]);
        for (std::size_t r = 0; r < ty_v; ++r) {
            for (std::size_t j = 0; j < tx_w; ++j) {
                // + sum_c phi_v[r][c] * src_a[c][j]
                if (block_of_vertex[v] != static_cast<std::size_t>(-1)) {
                    const auto& blk = hs.layout[block_of_vertex[v]];
                    for (std::size_t c = 0; c < tx_v; ++c) {
                        const std::uint32_t coef = src_a.at(c, j);
                        if (coef)
                            sys.at(e, blk.offset + r * blk.cols + c) =
                                f.add(sys.at(e, blk.offset + r * blk.cols + c), coef);
                    }
                }
                // - sum_u tgt_a[r][u] * phi_w[u][j]
                if (block_of_vertex[w] != static_cast<std::size_t>(-1)) {
                    const auto& blk = hs.layout[block_of_vertex[w]];
                    for (std::size_t u = 0; u < ty_w; ++u) {
                        const std::uint32_t coef = tgt_a.at(r, u);
                        if (coef)
                            sys.at(e, blk.offset + u * blk.cols + j) =
                                f.sub(sys.at(e, blk.offset + u * blk.cols + j), coef);
                    }
                }
                ++e;
            }
        }
    }

    hs.basis_vectors = kernel_basis(sys);

    // reshape each kernel vector into a morphism
    for (std::size_t b = 0; b < hs.basis_vectors.rows(); ++b) {
        RepMorphism phi;
        phi.cat = &cat;
        phi.vertex_maps.reserve(static_cast<std::size_t>(cat.vertex_count()));
        for (int v = 0; v < cat.vertex_count(); ++v) {
            const std::size_t rows =
                static_cast<std::size_t>(tgt.dims[static_cast<std::size_t>(v)]);
            const std::size_t cols =
                static_cast<std::size_t>(src.dims[static_cast<std::size_t>(v)]);
            FieldMatrix m(rows, cols, p);
            const std::size_t bi = block_of_vertex[static_cast<std::size_t>(v)];
            if (bi != static_cast<std::size_t>(-1)) {
                const auto& blk = hs.layout[bi];
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c)
                        m.at(r, c) = hs.basis_vectors.at(b, blk.offset + r * blk.cols + c);
            }
            phi.vertex_maps.push_back(std::move(m));
        }
        hs.basis.push_back(std::move(phi));
    }
    return hs;
}

int hom_dim_oracle(const ModuleCategory& cat, const IncTuple& x, const IncTuple& y)
{
    const Representation mx = build_module(cat, x);
    const Representation my = build_module(cat, y);
    return solve_hom(mx, my).dim();
}

int ext_dim_oracle(const ModuleCategory& cat, const IncTuple& a, const IncTuple& b, int degree)
{
    cat.require_category_tuple(a);
    cat.require_category_tuple(b);
    const int d = cat.params().d;
    if (degree < 1 || degree > d)
        throw std::invalid_argument("ext degree must lie in 1..d");
    if (a[0] == 1)
        return 0; // M_a is projective

    const RepComplex res = resolution(cat, a, 1);
    const Representation mb = build_module(cat, b);

    // res.terms left to right: M_{a^d}, ..., M_{a^0}, M_a.
    // P_j = M_{a^j} sits at position d - j; the differential P_{j+1} -> P_j
    // is res.maps[d - j - 1].
    std::vector<HomSpace> hom(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j)
        hom[static_cast<std::size_t>(j)] = solve_hom(res.term_reps[static_cast<std::size_t>(d - j)], mb);

    // delta^j : Hom(P_j, M_b) -> Hom(P_{j+1}, M_b), phi -> phi . dif_{j+1}
    std::vector<FieldMatrix> delta(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const HomSpace& from = hom[static_cast<std::size_t>(j)];
        const HomSpace& to = hom[static_cast<std::size_t>(j + 1)];
        const RepMorphism& dif = res.maps[static_cast<std::size_t>(d - j - 1)];
        FieldMatrix dm(static_cast<std::size_t>(from.dim()), static_cast<std::size_t>(to.dim()),
                       cat.characteristic());
        for (int i = 0; i < from.dim(); ++i) {
            const RepMorphism psi = compose(dif, from.basis[static_cast<std::size_t>(i)]);
            const auto coeffs = solve_row_combination(to.basis_vectors, to.vectorize(psi));
            if (!coeffs)
                throw std::logic_error("composite not expressible in the hom basis");
            for (int c = 0; c < to.dim(); ++c)
                dm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
                    (*coeffs)[static_cast<std::size_t>(c)];
        }
        delta[static_cast<std::size_t>(j)] = std::move(dm);
    }

    const auto rank_delta = [&](int j) -> std::size_t {
        if (j < 0 || j >= d)
            return 0;
        return rank(delta[static_cast<std::size_t>(j)]);
    };
    return hom[static_cast<std::size_t>(degree)].dim() -
           static_cast<int>(rank_delta(degree)) - static_cast<int>(rank_delta(degree - 1));
}

std::vector<int> complex_homology_dims(const RepComplex& c)
{
    const std::size_t len = c.terms.size();
    for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
        if (!compose(c.maps[i], c.maps[i + 1]).is_zero())
            throw std::runtime_error("nonzero consecutive composite in complex");
    }

    const int nv = c.cat->vertex_count();
    std::vector<int> h(len, 0);
    for (std::size_t pos = 0; pos < len; ++pos) {
        int dim = c.term_reps[pos].total_dim();
        int rk_out = 0, rk_in = 0;
        for (int v = 0; v < nv; ++v) {
            if (pos < c.maps.size())
                rk_out += static_cast<int>(rank(c.maps[pos].vertex_maps[static_cast<std::size_t>(v)]));
            if (pos > 0)
                rk_in += static_cast<int>(rank(c.maps[pos - 1].vertex_maps[static_cast<std::size_t>(v)]));
        }
        h[pos] = dim - rk_out - rk_in;
    }
    return h;
}

} // namespace widecat
