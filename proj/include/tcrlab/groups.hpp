#pragma once

#include <string>
#include <vector>

#include "tcrlab/linalg.hpp"

namespace tcrlab {

/* Finitely generated abelian group in invariant-factor normal form:
 * Z^free_rank (+) Z_{t_1} (+) ... (+) Z_{t_k} with t_1 | t_2 | ... | t_k and
 * every t_i >= 2. Generators are ordered free part first. */
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion_factors;

    static FgAbelianGroup validated(std::size_t free_rank, std::vector<Integer> torsion);

    std::size_t generator_count() const { return free_rank + torsion_factors.size(); }
    bool is_trivial() const { return generator_count() == 0; }
    bool is_torsion_free() const { return torsion_factors.empty(); }

    /* generator_count x k matrix whose columns t_j e_{free_rank+j} span the
     * relation lattice in normal-form coordinates. */
    IntegerMatrix relation_matrix() const;

    std::string describe() const;  // e.g. "Z^2 (+) Z_2 (+) Z_4"

    bool operator==(const FgAbelianGroup&) const = default;
};

/* Homomorphism between normal-form abelian groups. matrix has one column per
 * source generator and one row per target generator. */
struct AbelianHom {
    FgAbelianGroup source;
    FgAbelianGroup target;
    IntegerMatrix matrix;

    static AbelianHom validated(FgAbelianGroup source, FgAbelianGroup target, IntegerMatrix matrix);
    bool is_zero() const;
};

struct FreeGroup {
    std::size_t rank = 1;
    bool operator==(const FreeGroup&) const = default;
};

/* Free-group words as signed 1-based generator indices: 2 is the second
 * generator, -2 its inverse. */
using Word = std::vector<int>;

Word free_reduce(Word w);

struct FreeHom {
    FreeGroup source;
    FreeGroup target;
    std::vector<Word> images;  // one freely reduced word per source generator

    /* Validates ranks and indices and reduces the images. */
    static FreeHom validated(FreeGroup source, FreeGroup target, std::vector<Word> images);

    bool is_zero() const;
};

enum class SurfaceClassification { factors_through_free, does_not_factor, unknown };

/* Epimorphism of fundamental groups of closed orientable surfaces. Whether it
 * factors through a free group is an input tag, not a decision procedure. */
struct SurfaceHom {
    std::size_t source_genus = 1;
    std::size_t target_genus = 1;
    SurfaceClassification classification = SurfaceClassification::unknown;

    static SurfaceHom validated(std::size_t source_genus, std::size_t target_genus,
                                SurfaceClassification classification);
};

/* Folded basepointed graph of a finitely generated subgroup of a free group.
 * Vertex 0 is the basepoint. Once folded, no vertex carries two equal-label
 * outgoing (or incoming) edges and edges are sorted and deduplicated. */
struct StallingsGraph {
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        unsigned label = 0;
        auto operator<=>(const Edge&) const = default;
    };

    std::size_t vertex_count = 1;
    std::vector<Edge> edges;
    bool folded = false;

    bool is_rose(std::size_t petals) const;
    bool operator==(const StallingsGraph&) const = default;
};

FgAbelianGroup normalize_presentation(std::size_t generators, const IntegerMatrix& relations);

/* Normal form plus the unimodular change of basis: a hom matrix written
 * against the presentation generators becomes to_normal_form * matrix. */
struct NormalizedPresentation {
    FgAbelianGroup group;
    IntegerMatrix to_normal_form;  // group generators x presentation generators
};
NormalizedPresentation normalize_presentation_with_basis(std::size_t generators, const IntegerMatrix& relations);

std::size_t smith_normal_number(const FgAbelianGroup& g);

/* True iff the matrix maps every source relation into the target relation
 * lattice, i.e. defines a homomorphism of the presented groups. */
bool check_well_defined(const AbelianHom& h);

/* True iff generator images together with the target relations span the
 * target lattice. Throws HypothesisError on an ill-defined hom. */
bool is_epimorphism_abelian(const AbelianHom& h);

/* True iff some torsion generator of the source has nonzero image. */
bool torsion_image_is_nonzero(const AbelianHom& h);

/* Kernel-lattice injectivity test. */
bool is_injective_abelian(const AbelianHom& h);

/* Stallings folding of the wedge of image loops. Hanging trees are trimmed;
 * the basepoint survives trimming. When edge_counts is given it receives the
 * edge count after each fold identification (strictly decreasing). */
StallingsGraph fold(const FreeHom& h, std::vector<std::size_t>* edge_counts = nullptr);

/* True iff the folded image graph is the rose with target.rank petals. */
bool is_surjective_free(const FreeHom& h);

/* Matrix of the induced map on abelianizations, target.rank x source.rank. */
IntegerMatrix abelianization_matrix(const FreeHom& h);

}  // namespace tcrlab
