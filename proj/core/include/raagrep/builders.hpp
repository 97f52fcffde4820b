#pragma once

#include "raagrep/graph.hpp"
#include "raagrep/symspace.hpp"

#include <string>
#include <utility>
#include <vector>

namespace raagrep {

enum class Axis { x, y, z };

/// Rotation about a coordinate axis with exact cos/sin on the unit circle.
struct RotationParam {
    Axis axis;
    FieldElement cos_part;
    FieldElement sin_part;

    RotationParam(Axis ax, FieldElement c, FieldElement s);
    static RotationParam identity(Axis ax);
    bool is_identity() const;
};

/// 3x3 rotation fixing the named axis; block [[c, s], [-s, c]] on the
/// complementary coordinates in natural order.
ExactMatrix rotation_about_axis(const RotationParam& p);

/// The SO(3,2) embeddings of SO(2): i = 0 places the block on rows/cols
/// (1,2) (rotations about the x-axis of the SO(3) factor), i = 1 on (0,2).
ExactMatrix tau_embed(int i, const FieldElement& c, const FieldElement& s);
ExactMatrix tau_embed(int i, const RotationParam& p);

/// Given R1 about x and R2 about y, find R3 about z zeroing the first
/// coordinate of R3 R2 R1 W for W = (0,1,0), and the unique R4 about x with
/// R4 R3 R2 R1 W = W; the product then commutes with T2 = diag(2,1/4,2).
/// Exact closure is verified before returning.
std::pair<RotationParam, RotationParam> solve_sl3_closure(const RotationParam& r1,
                                                          const RotationParam& r2);

/// SO(3,2) analogue: R1, R3 about y and R2 about x are given; returns R4
/// about x and R5 about y such that R5 R4 R3 R2 R1 fixes the x-axis.
std::pair<RotationParam, RotationParam> solve_so32_closure(const RotationParam& r1,
                                                           const RotationParam& r2,
                                                           const RotationParam& r3);

/// One singular geodesic in an edge 2-plane: its axial isometry and the
/// direction of its axis in (sigma_v, sigma_w) exponent coordinates.
struct SingularMember {
    ExactMatrix isometry;
    Integer dir_a;
    Integer dir_b;
};

struct EdgeData {
    int v = 0;
    int w = 0; // v < w
    FlatSpan span;
    std::vector<SingularMember> singular_set;
};

struct Provenance {
    std::string construction;
    std::vector<std::pair<std::string, std::string>> params;
};

/**
 * A graph together with one axial isometry per vertex and per-edge flat
 * data: the object the certification quantifies over. Generators on an edge
 * must commute and every singular set contains the two endpoint generators.
 */
class Configuration {
  public:
    Configuration(SimpleGraph graph, GroupForm form, std::vector<ExactMatrix> generators,
                  std::vector<EdgeData> edges, Provenance provenance);

    const SimpleGraph& graph() const { return graph_; }
    const GroupForm& form() const { return form_; }
    const std::vector<ExactMatrix>& generators() const { return generators_; }
    const ExactMatrix& generator(int v) const { return generators_.at(std::size_t(v)); }
    const std::vector<EdgeData>& edges() const { return edges_; }
    const EdgeData& edge_data(int v, int w) const;
    const Provenance& provenance() const { return provenance_; }

  private:
    SimpleGraph graph_;
    GroupForm form_;
    std::vector<ExactMatrix> generators_;
    std::vector<EdgeData> edges_;
    Provenance provenance_;
};

// Built-in rotation choices for the shipped constructions.
RotationParam sl3_default_r1();
RotationParam sl3_default_r2();
RotationParam so32_default_r1();
RotationParam so32_default_r2();
RotationParam so32_default_r3();

// T1 = diag(1/4,2,2), T2 = diag(2,1/4,2), T3 = diag(2,2,1/4).
ExactMatrix sl3_t(int i);
// exp(a Y0), exp(a Y1) with a = log(2 + sqrt(3)).
ExactMatrix so32_t(int i);
// The five SL(5,Z) generators for a given n >= 2 (i in 1..5).
ExactMatrix sl5z_generator(int i, long n);

/// Five-cycle configuration in SL(3,R) built from two rotations.
Configuration build_sl3(const RotationParam& r1, const RotationParam& r2);

/// Six-cycle configuration in SO(3,2) built from three rotations.
Configuration build_so32(const RotationParam& r1, const RotationParam& r2,
                         const RotationParam& r3);

/// Five-cycle configuration of integer matrices in SL(5,Z).
Configuration build_sl5z(long n);

/// Replace each generator by a positive power; the commutation pattern is
/// re-verified and singular sets are recomputed from the powered generators.
Configuration power_scale(const Configuration& c, const std::vector<long>& exps);

/// Smallest e >= 1 with A^e congruent to the identity mod p.
Integer congruence_order(const ExactMatrix& a, std::int64_t p);

} // namespace raagrep
