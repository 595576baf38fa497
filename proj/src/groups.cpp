#include "tcrlab/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tcrlab {

FgAbelianGroup FgAbelianGroup::validated(std::size_t free_rank, std::vector<Integer> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw InputError("torsion factor < 2 in normal form");
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
            throw InputError("torsion factors violate the divisibility chain");
    }
    return FgAbelianGroup{free_rank, std::move(torsion)};
}

IntegerMatrix FgAbelianGroup::relation_matrix() const {
    IntegerMatrix rel(generator_count(), torsion_factors.size());
    for (std::size_t j = 0; j < torsion_factors.size(); ++j) rel.at(free_rank + j, j) = torsion_factors[j];
    return rel;
}

std::string FgAbelianGroup::describe() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const Integer& t : torsion_factors) {
        if (!s.empty()) s += " (+) ";
        s += "Z_" + t.get_str();
    }
    return s;
}

AbelianHom AbelianHom::validated(FgAbelianGroup source, FgAbelianGroup target, IntegerMatrix matrix) {
    if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
        throw InputError("hom matrix shape must be target generators x source generators");
    return AbelianHom{std::move(source), std::move(target), std::move(matrix)};
}

bool AbelianHom::is_zero() const {
    if (source.is_trivial() || target.is_trivial()) return true;
    IntegerMatrix rel = target.relation_matrix();
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
        std::vector<Integer> col(matrix.rows());
        for (std::size_t i = 0; i < matrix.rows(); ++i) col[i] = matrix.at(i, j);
        if (!lattice_contains(rel, col)) return false;
    }
    return true;
}

NormalizedPresentation normalize_presentation_with_basis(std::size_t generators, const IntegerMatrix& relations) {
    if (relations.rows() != generators) throw InputError("relation matrix must have one row per generator");
    SnfDecomposition snf = smith_normal_form(relations);

    // In coordinates z = u y the relation lattice is spanned by d_i e_i, so
    // rows with d_i = 1 vanish, d_i = 0 rows are free, the rest are torsion.
    const std::size_t nonzero = snf.invariant_factors.size();
    std::vector<std::size_t> free_rows, torsion_rows;
    std::vector<Integer> torsion;
    for (std::size_t i = nonzero; i < generators; ++i) free_rows.push_back(i);
    for (std::size_t i = 0; i < nonzero; ++i) {
        if (snf.invariant_factors[i] > 1) {
            torsion_rows.push_back(i);
            torsion.push_back(snf.invariant_factors[i]);
        }
    }

    FgAbelianGroup group = FgAbelianGroup::validated(free_rows.size(), std::move(torsion));
    IntegerMatrix basis(group.generator_count(), generators);
    std::size_t row = 0;
    for (std::size_t src : free_rows) {
        for (std::size_t j = 0; j < generators; ++j) basis.at(row, j) = snf.u.at(src, j);
        ++row;
    }
    for (std::size_t src : torsion_rows) {
        for (std::size_t j = 0; j < generators; ++j) basis.at(row, j) = snf.u.at(src, j);
        ++row;
    }
    return NormalizedPresentation{std::move(group), std::move(basis)};
}

FgAbelianGroup normalize_presentation(std::size_t generators, const IntegerMatrix& relations) {
    return normalize_presentation_with_basis(generators, relations).group;
}

std::size_t smith_normal_number(const FgAbelianGroup& g) { return g.torsion_factors.size(); }

bool check_well_defined(const AbelianHom& h) {
    IntegerMatrix target_rel = h.target.relation_matrix();
    for (std::size_t j = 0; j < h.source.torsion_factors.size(); ++j) {
        const std::size_t col = h.source.free_rank + j;
        const Integer& order = h.source.torsion_factors[j];
        std::vector<Integer> image(h.matrix.rows());
        for (std::size_t i = 0; i < h.matrix.rows(); ++i) image[i] = order * h.matrix.at(i, col);
        if (!lattice_contains(target_rel, image)) return false;
    }
    return true;  // free generators impose no condition
}

bool is_epimorphism_abelian(const AbelianHom& h) {
    if (!check_well_defined(h))
        throw HypothesisError("is_epimorphism_abelian: matrix does not define a homomorphism");
    IntegerMatrix spanning = h.matrix.augmented(h.target.relation_matrix());
    return cokernel_invariants(spanning).is_trivial();
}

bool torsion_image_is_nonzero(const AbelianHom& h) {
    IntegerMatrix target_rel = h.target.relation_matrix();
    for (std::size_t j = 0; j < h.source.torsion_factors.size(); ++j) {
        const std::size_t col = h.source.free_rank + j;
        std::vector<Integer> image(h.matrix.rows());
        for (std::size_t i = 0; i < h.matrix.rows(); ++i) image[i] = h.matrix.at(i, col);
        if (!lattice_contains(target_rel, image)) return true;
    }
    return false;
}

bool is_injective_abelian(const AbelianHom& h) {
    // ker = {x : M x in target relation lattice}; injective iff every kernel
    // generator already lies in the source relation lattice.
    IntegerMatrix target_rel = h.target.relation_matrix();
    IntegerMatrix source_rel = h.source.relation_matrix();
    IntegerMatrix neg_rel = target_rel;
    for (std::size_t i = 0; i < neg_rel.rows(); ++i)
        for (std::size_t j = 0; j < neg_rel.cols(); ++j) neg_rel.at(i, j) = -neg_rel.at(i, j);

    IntegerMatrix block = h.matrix.augmented(neg_rel);
    IntegerMatrix kernel = integer_kernel(block);
    const std::size_t n = h.source.generator_count();
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
        std::vector<Integer> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = kernel.at(i, j);
        if (!lattice_contains(source_rel, x)) return false;
    }
    // Torsion generators can also die by order collapse: e_i of order d maps
    // injectively iff no smaller multiple of its image is a relation. The
    // kernel lattice above already captures that, since c e_i with c < d is a
    // kernel element exactly when c image(e_i) lies in the target lattice.
    return true;
}

Word free_reduce(Word w) {
    Word out;
    for (int s : w) {
        if (s == 0) throw InputError("generator index 0 in word");
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

FreeHom FreeHom::validated(FreeGroup source, FreeGroup target, std::vector<Word> images) {
    if (source.rank < 1 || target.rank < 1) throw InputError("free group rank must be >= 1");
    if (images.size() != source.rank) throw InputError("one image word required per source generator");
    for (Word& w : images) {
        for (int s : w)
            if (s == 0 || static_cast<std::size_t>(s > 0 ? s : -s) > target.rank)
                throw InputError("word letter outside target generator range");
        w = free_reduce(std::move(w));
    }
    return FreeHom{source, target, std::move(images)};
}

bool FreeHom::is_zero() const {
    return std::all_of(images.begin(), images.end(), [](const Word& w) { return w.empty(); });
}

SurfaceHom SurfaceHom::validated(std::size_t source_genus, std::size_t target_genus,
                                 SurfaceClassification classification) {
    if (source_genus < 1 || target_genus < 1) throw InputError("surface genus must be >= 1");
    return SurfaceHom{source_genus, target_genus, classification};
}

bool StallingsGraph::is_rose(std::size_t petals) const {
    if (vertex_count != 1 || edges.size() != petals) return false;
    std::set<unsigned> labels;
    for (const Edge& e : edges) {
        if (e.from != 0 || e.to != 0) return false;
        labels.insert(e.label);
    }
    for (unsigned l = 1; l <= petals; ++l)
        if (!labels.count(l)) return false;
    return true;
}

namespace {

using Edge = StallingsGraph::Edge;

void dedupe(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

/* Merge vertex b into vertex a across the edge list. */
void merge_vertex(std::vector<Edge>& edges, std::size_t a, std::size_t b) {
    for (Edge& e : edges) {
        if (e.from == b) e.from = a;
        if (e.to == b) e.to = a;
    }
    dedupe(edges);
}

/* One fold: two equal-label edges leaving (or entering) a common vertex get
 * their far endpoints identified. Returns false when already folded. */
bool fold_once(std::vector<Edge>& edges) {
    std::map<std::pair<std::size_t, unsigned>, std::size_t> seen_out, seen_in;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto out_key = std::make_pair(edges[k].from, edges[k].label);
        auto in_key = std::make_pair(edges[k].to, edges[k].label);
        if (auto it = seen_out.find(out_key); it != seen_out.end()) {
            std::size_t other = edges[it->second].to;
            std::size_t mine = edges[k].to;
            merge_vertex(edges, std::min(other, mine), std::max(other, mine));
            return true;
        }
        if (auto it = seen_in.find(in_key); it != seen_in.end()) {
            std::size_t other = edges[it->second].from;
            std::size_t mine = edges[k].from;
            merge_vertex(edges, std::min(other, mine), std::max(other, mine));
            return true;
        }
        seen_out.emplace(out_key, k);
        seen_in.emplace(in_key, k);
    }
    return false;
}

}  // namespace

StallingsGraph fold(const FreeHom& h, std::vector<std::size_t>* edge_counts) {
    std::vector<Edge> edges;
    std::size_t next_vertex = 1;  // vertex 0 is the basepoint

    // Wedge of image loops at the basepoint.
    for (const Word& w : h.images) {
        std::size_t prev = 0;
        for (std::size_t p = 0; p < w.size(); ++p) {
            std::size_t next = p + 1 == w.size() ? 0 : next_vertex++;
            int s = w[p];
            if (s > 0)
                edges.push_back({prev, next, static_cast<unsigned>(s)});
            else
                edges.push_back({next, prev, static_cast<unsigned>(-s)});
            prev = next;
        }
    }
    dedupe(edges);

    while (fold_once(edges)) {
        if (edge_counts) edge_counts->push_back(edges.size());
    }

    // Trim hanging trees; the basepoint is never removed.
    bool trimmed = true;
    while (trimmed) {
        trimmed = false;
        std::map<std::size_t, std::size_t> degree;
        for (const Edge& e : edges) {
            degree[e.from]++;
            degree[e.to]++;
        }
        for (auto [v, deg] : degree) {
            if (v != 0 && deg <= 1) {
                std::erase_if(edges, [v](const Edge& e) { return e.from == v || e.to == v; });
                trimmed = true;
                break;
            }
        }
    }

    // Compact vertex ids, basepoint first, then in order of appearance.
    std::map<std::size_t, std::size_t> remap{{0, 0}};
    for (const Edge& e : edges) {
        for (std::size_t v : {e.from, e.to})
            if (!remap.count(v)) {
                std::size_t id = remap.size();
                remap[v] = id;
            }
    }
    StallingsGraph g;
    g.vertex_count = remap.size();
    for (const Edge& e : edges) g.edges.push_back({remap[e.from], remap[e.to], e.label});
    dedupe(g.edges);
    g.folded = true;
    return g;
}

bool is_surjective_free(const FreeHom& h) { return fold(h).is_rose(h.target.rank); }

IntegerMatrix abelianization_matrix(const FreeHom& h) {
    IntegerMatrix m(h.target.rank, h.source.rank);
    for (std::size_t j = 0; j < h.images.size(); ++j)
        for (int s : h.images[j]) {
            if (s > 0)
                m.at(static_cast<std::size_t>(s) - 1, j) += 1;
            else
                m.at(static_cast<std::size_t>(-s) - 1, j) -= 1;
        }
    return m;
}

}  // namespace tcrlab
