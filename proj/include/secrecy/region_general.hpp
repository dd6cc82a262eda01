#pragma once

#include <cstdint>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/rates.hpp"

namespace secrecy {

/// P(u) P(v1,v2|u) P(x|v1,v2) for the general inner bound. The middle kernel
/// maps U to the product alphabet V1 x V2 (column index v1*|V2| + v2).
struct InnerBoundDecomposition {
  Pmf p_u;
  std::size_t v1_size;
  std::size_t v2_size;
  DiscreteChannel p_v1v2_given_u;   // |U| x (|V1|*|V2|)
  DiscreteChannel p_x_given_v1v2;   // (|V1|*|V2|) x |X|
};

void validate(const InnerBoundDecomposition& dec, std::size_t x_size);

/// Right-hand sides of the four inner-bound inequalities:
///   R0            <= b0
///   R0 + R1       <= b1
///   R0 + R2       <= b2
///   R0 + R1 + R2  <= b12
/// Clipped at zero; raw pre-clip values retained.
struct InnerBounds {
  double b0, b1, b2, b12;
  double raw0, raw1, raw2, raw12;
};

InnerBounds evaluate_inner_bound(const BceChannel& bce,
                                 const InnerBoundDecomposition& dec);

bool membership(const BceChannel& bce, const InnerBoundDecomposition& dec,
                const RateTriple& triple);
bool membership(const InnerBounds& bounds, const RateTriple& triple);

struct InnerRegionCaps {
  std::size_t u = 2;
  std::size_t v1 = 2;
  std::size_t v2 = 2;
};

/// Union over sampled decompositions of the vertex triples of the bound
/// polytope. Deterministic under a fixed seed. Guard: |U|*|V1|*|V2| <= 64.
std::vector<RateTriple> sample_inner_region(const BceChannel& bce,
                                            const InnerRegionCaps& caps,
                                            std::size_t samples,
                                            std::uint64_t seed);

/// Vertex triples of {R >= 0, R0 <= b0, R0+R1 <= b1, R0+R2 <= b2,
/// R0+R1+R2 <= b12}.
std::vector<RateTriple> bound_vertices(const InnerBounds& bounds);

/// Deterministic decomposition sampler shared by region and simulation tools.
InnerBoundDecomposition sample_decomposition(const InnerRegionCaps& caps,
                                             std::size_t x_size, class Rng& rng);

}  // namespace secrecy
