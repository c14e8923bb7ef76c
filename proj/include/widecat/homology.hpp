#pragma once

// Homological oracles, independent of the closed formulas they are tested
// against: Hom dimensions by solving the per-arrow commutation equations,
// Ext dimensions from the s=1 projective resolution, and exactness checks
// for complexes via rank computations.

#include "widecat/fieldmatrix.hpp"
#include "widecat/reps.hpp"

#include <vector>

namespace widecat {

// A solved hom-space Hom(src, tgt): basis morphisms plus the raw kernel
// vectors they came from, so composites can be re-expressed in the basis.
struct HomSpace {
    std::vector<RepMorphism> basis;
    FieldMatrix basis_vectors; // one row per basis element

    // layout of the unknown vector: one block per vertex with
    // src.dims[v] * tgt.dims[v] entries, vertices ascending, row-major
    struct Block {
        int vertex;
        std::size_t rows, cols, offset;
    };
    std::vector<Block> layout;

    int dim() const { return static_cast<int>(basis.size()); }
    std::vector<std::uint32_t> vectorize(const RepMorphism& phi) const;
};

HomSpace solve_hom(const Representation& src, const Representation& tgt);

// dim Hom(M_x, M_y), by commutation-equation solving.
int hom_dim_oracle(const ModuleCategory& cat, const IncTuple& x, const IncTuple& y);

// dim Ext^degree(M_a, M_b), computed by applying Hom(-, M_b) to the s=1
// resolution of M_a.  degree must lie in 1..d.
int ext_dim_oracle(const ModuleCategory& cat, const IncTuple& a, const IncTuple& b, int degree);

// Per-position homology dimensions of a complex whose consecutive
// composites vanish; throws std::runtime_error on a nonzero composite.
std::vector<int> complex_homology_dims(const RepComplex& c);

} // namespace widecat
