#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tcrlab/groups.hpp"
#include "tcrlab/value.hpp"

namespace tcrlab {

enum class InvariantKind { cat, cd, tcr };
std::string to_string(InvariantKind k);

/* Epimorphism data for the nilpotent / almost-nilpotent bound theorems. The
 * target's cohomological dimension is user-supplied. */
struct NilpotentFacts {
    enum class Flavor { nilpotent, almost_nilpotent };
    Flavor flavor = Flavor::nilpotent;
    std::uint64_t cd_target = 0;
};

using HomVariant = std::variant<AbelianHom, FreeHom, SurfaceHom, NilpotentFacts>;

/* What a derived fact is about. `hom` is the hom the engine reasons on (the
 * reduced hom when the torsion-to-zero reduction applies), `original_hom`
 * appears only as the final transfer target of that reduction. */
enum class SubjectKind { hom, original_hom, source_group, target_group, factor_group };

struct FactKey {
    InvariantKind invariant = InvariantKind::cat;
    SubjectKind subject = SubjectKind::hom;
    unsigned power = 1;  // power of the map, >= 1; meaningful for hom subjects
    unsigned r = 0;      // sequential parameter, nonzero only for tcr facts
    auto operator<=>(const FactKey&) const = default;
};

/* How a step's conclusion follows from its premises; drives replay checks. */
enum class StepOp {
    axiom,        // external input: base value, hypothesis, closed form, oracle
    equal_from,   // conclusion fact equals the premise fact
    lower_from,   // conclusion.lo >= premise.lo
    upper_from,   // conclusion.hi <= premise.hi
    scale_equal,  // conclusion = k * premise (or premise / k), k from the power keys
    scale_upper,  // conclusion.hi <= k * premise.hi
    min_upper,    // conclusion.hi <= min of premise hi's
    hull,         // conclusion = interval hull of the premises
    report        // closing restatement of the queried fact
};
std::string to_string(StepOp op);

struct DerivationStep {
    std::string rule_id;
    std::string citation;
    StepOp op = StepOp::axiom;
    std::vector<std::size_t> premises;  // indices of earlier steps
    FactKey fact;
    InvariantValue value;  // the fact's value after this step
    std::string note;
};

/* Recomputes the conclusion of trace[index] from its premises; equals
 * trace[index].value on every well-formed trace. Axioms replay to their
 * stated value. */
InvariantValue replay_step(const std::vector<DerivationStep>& trace, std::size_t index);

enum class HypothesisStatus { checked, asserted, failed };
std::string to_string(HypothesisStatus s);

struct UserFact {
    InvariantKind invariant = InvariantKind::tcr;
    SubjectKind subject = SubjectKind::hom;  // hom, source_group or target_group
    unsigned r = 0;
    InvariantValue value;
};

struct Query {
    HomVariant hom;
    unsigned r = 2;
    InvariantKind invariant = InvariantKind::tcr;
    std::vector<UserFact> user_facts;
    bool disable_closed_forms = false;
};

struct InvariantReport {
    InvariantValue value;
    std::vector<DerivationStep> trace;
    std::map<std::string, HypothesisStatus> hypotheses;
    bool reduced = false;  // torsion-to-zero reduction applied (names phibar in notes)
};

/* ---- closed forms ---- */

InvariantValue cd_of_abelian_epi(const AbelianHom& h);
InvariantValue tcr_of_abelian_epi(const AbelianHom& h, unsigned r);
InvariantValue tcr_of_free_epi(const FreeHom& h, unsigned r);
InvariantValue cat_cd_of_free_epi(const FreeHom& h);
InvariantValue tcr_injective_into_abelian(const FgAbelianGroup& source, unsigned r);
InvariantValue nilpotent_tcr_bounds(const NilpotentFacts& facts, unsigned r);

struct SurfaceValues {
    InvariantValue cat;
    InvariantValue cd;
    InvariantValue tcr;
    bool disjunction = false;  // classification unknown: values are branch hulls
};
SurfaceValues surface_closed_forms(const SurfaceHom& h, unsigned r);
InvariantReport surface_invariants(const SurfaceHom& h, unsigned r, InvariantKind invariant);

/* ---- propagation ---- */

struct PropagationContext {
    unsigned r = 2;
    bool tcr_powers = false;          // instantiate map powers r-1 and r
    bool abelian_hom = false;         // enables the Eilenberg-Ganea equality (EG)
    bool free_abelian_source = false; // enables R8 (topological-group source)
    bool scaling_allowed = false;     // enables R5 (product formula)
};

struct SeedFact {
    std::string rule_id;
    std::string citation;
    FactKey fact;
    InvariantValue value;
    std::string note;
};

struct PropagationOutcome {
    std::map<FactKey, InvariantValue> facts;
    std::vector<DerivationStep> trace;
    std::size_t seed_count = 0;
};

/* Runs the inequality rules to their least fixpoint over the seeded facts.
 * Every strict tightening is recorded; conflicting bounds raise
 * InconsistencyError naming the two steps involved. */
PropagationOutcome propagate(const std::vector<SeedFact>& seeds, const PropagationContext& ctx);

/* Verifies hypotheses, applies closed forms (unless disabled), propagates,
 * and assembles the citation-bearing report for one (invariant, r) query. */
InvariantReport compute(const Query& q);

std::string describe_fact(const FactKey& key, bool reduced_naming);

}  // namespace tcrlab
