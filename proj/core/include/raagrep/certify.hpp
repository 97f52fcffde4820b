#pragma once

#include "raagrep/builders.hpp"
#include "raagrep/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace raagrep {

enum class PairReason { non_edge_vertices, disjoint_edges, shared_endpoint, eta_pairs };

std::string reason_name(PairReason r);

/// Identifies a geodesic of a configuration: a vertex generator or a
/// singular-set member carrying its flat tag.
struct GeodesicRef {
    enum class Kind { generator, singular_member };
    Kind kind = Kind::generator;
    int vertex = -1;              // generator
    int edge_v = -1, edge_w = -1; // flat tag
    int member = -1;              // index into the edge's singular set

    std::string label() const;
};

struct PairRequirement {
    GeodesicRef left;
    GeodesicRef right;
    PairReason reason = PairReason::non_edge_vertices;
};

/// A nonzero entry of the additive commutator, recorded as evidence.
struct Witness {
    int row = 0;
    int col = 0;
    FieldElement value;
};

struct CheckedPair {
    PairRequirement requirement;
    std::optional<Witness> witness; // absent when the pair commutes (a failure)
};

struct EdgeCheck {
    int v = 0, w = 0;
    bool unique_flat = false;
    bool infinite_singular = false;
    int singular_count = 0; // number of singular direction lines when finite
    bool set_matches = true; // stored singular set size equals the direction count
};

/// Three counts of the non-adjacency requirements. `distinct_pairs` is the
/// deduplicated union of the rules (every one is checked with a witness);
/// `rule_instances` counts requirements per edge-pair rule instance without
/// deduplication; `explicit_checks` drops pairs of flat extras in flats
/// sharing a vertex, whose non-commutation follows from the product
/// structure once the neighbouring generator checks are in hand.
struct PairAccounting {
    std::size_t distinct_pairs = 0;
    std::size_t rule_instances = 0;
    std::size_t explicit_checks = 0;
};

struct Certificate {
    std::string construction;
    bool adjacency_ok = true;
    std::vector<EdgeCheck> edge_checks;
    std::vector<CheckedPair> pairs;
    PairAccounting accounting;
    std::vector<std::string> failures;
    bool pass = false;

    std::string verdict() const { return pass ? "pass" : "fail"; }
    std::string first_failure() const { return failures.empty() ? "" : failures.front(); }
};

/// Deduplicated unordered non-adjacency requirements from the four rules:
/// non-edge vertex pairs, pairs across disjoint edges (minus the adjacent
/// generator exceptions), pairs across edges sharing an endpoint (minus the
/// shared generator), with extra-extra pairs tagged as eta pairs.
std::vector<PairRequirement> required_pairs(const Configuration& c);

PairAccounting pair_accounting(const Configuration& c);

const ExactMatrix& resolve(const Configuration& c, const GeodesicRef& ref);

/// Run every finitely checkable hypothesis: adjacency pattern, per-edge flat
/// uniqueness and singular-direction finiteness, and a nonzero commutator
/// witness per required pair. Failures are data, never exceptions.
Certificate certify_configuration(const Configuration& c);

struct SmokeReport {
    std::uint64_t words_checked = 0;
    bool all_nonidentity = true;
    std::optional<Word> counterexample;
};

/// Every nontrivial reduced word maps to a non-identity matrix, exactly.
/// A modular homomorphism filters the bulk; only images that collide with
/// the identity fall back to exact arithmetic.
SmokeReport faithfulness_smoke(const Configuration& c, int max_syllables, long exponent_bound);

/// Exact characteristic polynomial per generator; configurations with
/// different fingerprint multisets are non-conjugate representations.
std::vector<std::vector<FieldElement>> conjugacy_fingerprint(const Configuration& c);

} // namespace raagrep
