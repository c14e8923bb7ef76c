#pragma once

// Explicit realizations of the indecomposables M_x of M_{n,d} as
// representations over the quiver Q^{n,d-1}, the canonical morphisms
// between them, the exact sequences attached to E_Ext pairs and the
// s-shifted resolutions.
//
// Convention: the matrix stored for an arrow a : v -> w is a linear map
// from the space at w to the space at v (shape dims[v] x dims[w]).  This is
// the right-module / opposite-quiver reading and matches how the modules
// are usually drawn.  A morphism phi : M -> N is a per-vertex family with
// phi_v . M_a = N_a . phi_w for every arrow a : v -> w.

#include "widecat/fieldmatrix.hpp"
#include "widecat/quiver.hpp"
#include "widecat/tuples.hpp"

#include <map>
#include <string>
#include <vector>

namespace widecat {

// Fixes (n, d) and the working prime; owns the module-level quiver Q^{n,d-1}
// that all representations below refer to.  Immutable after construction.
class ModuleCategory {
public:
    explicit ModuleCategory(Params params, std::uint32_t p = kDefaultFieldChar);

    const Params& params() const { return params_; }
    std::uint32_t characteristic() const { return p_; }
    const QuiverPresentation& module_quiver() const { return quiver_; }
    int vertex_count() const { return static_cast<int>(quiver_.vertices.size()); }

    // Index of a vertex of Q^{n,d-1}; throws if the tuple is not a vertex.
    int vertex_index(const IncTuple& v) const;

    void require_category_tuple(const IncTuple& x) const;

private:
    Params params_;
    std::uint32_t p_;
    QuiverPresentation quiver_;
};

struct Representation {
    const ModuleCategory* cat = nullptr;
    std::vector<int> dims;               // per vertex index of the module quiver
    std::vector<FieldMatrix> arrow_maps; // per arrow index, shape dims[src] x dims[dst]

    int total_dim() const;
    bool satisfies_relations() const;
};

struct RepMorphism {
    const ModuleCategory* cat = nullptr;
    std::vector<FieldMatrix> vertex_maps; // per vertex, shape tgt.dims[v] x src.dims[v]

    bool is_zero() const;
};

// compose(f, g) is "f then g": for f : A -> B and g : B -> C the result is
// the morphism A -> C with vertex maps g_v . f_v.
RepMorphism compose(const RepMorphism& f, const RepMorphism& g);

bool commutes(const Representation& src, const Representation& tgt, const RepMorphism& phi);

// A finite complex T_0 -> T_1 -> ... -> T_{L-1} stored left to right; each
// term is a direct sum of indecomposables M_z with the summand labels kept.
struct RepComplex {
    const ModuleCategory* cat = nullptr;
    std::vector<std::vector<IncTuple>> terms; // summand labels per position
    std::vector<Representation> term_reps;
    std::vector<RepMorphism> maps;            // maps[i] : term i -> term i+1
    std::string kind;                         // "" or "minimal projective resolution"
};

// Vertices y of Q^{n,d-1} with x_i <= y_i < x_{i+1} for all i, lexicographic.
std::vector<IncTuple> support(const ModuleCategory& cat, const IncTuple& x);

// M_x: one-dimensional on its support, identity arrows inside the support.
Representation build_module(const ModuleCategory& cat, const IncTuple& x);

// Direct sum of the listed indecomposables, blocks in list order.
Representation direct_sum(const ModuleCategory& cat, const std::vector<IncTuple>& summands);

// The canonical morphism M_x -> M_y: identity on the common support when
// e_hom(x, y), the zero morphism otherwise.
RepMorphism canonical_hom(const ModuleCategory& cat, const IncTuple& x, const IncTuple& y);

// The exact sequence 0 -> M_x -> E_d -> ... -> E_1 -> M_y -> 0 attached to
// an E_Ext pair: E_k collects the M_z with z_i in {x_i, y_i} taking exactly
// k coordinates from x; component maps are canonical morphisms with Koszul
// signs.  Throws unless e_ext(x, y).
RepComplex ext_sequence(const ModuleCategory& cat, const IncTuple& x, const IncTuple& y);

// 0 -> M_{x^d} -> ... -> M_{x^0} -> M_x -> 0 with
// x^i = (s, x_0, ..., x_{i-1}, x_{i+1}, ..., x_d); requires s < x_0.
// For s = 1 the terms are projective and the complex is flagged as the
// minimal projective resolution.
RepComplex resolution(const ModuleCategory& cat, const IncTuple& x, int s);

struct ProjInj {
    bool projective = false; // x_0 = 1
    bool injective = false;  // x_d = n+d
};

ProjInj classify_proj_inj(const ModuleCategory& cat, const IncTuple& x);

// JSON for complexes: ordered term lists plus the per-vertex dense blocks
// of every map, row-major residues mod p.
std::string complex_to_json(const RepComplex& c);

} // namespace widecat
