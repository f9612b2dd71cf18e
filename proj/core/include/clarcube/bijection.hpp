#pragma once

#include <string>

#include "clarcube/clar.hpp"
#include "clarcube/cube.hpp"
#include "clarcube/hexsys.hpp"
#include "clarcube/report.hpp"
#include "clarcube/resonance.hpp"

namespace clarcube {

struct VerifyOptions {
  ClarOptions clar;
  std::size_t max_cubes = kDefaultCubeCap;
  std::size_t median_bound = kDefaultMedianBound;
  /// Largest cover count for the quadratic poset comparison.
  std::size_t poset_cap = 500;
  int fibonacene_bound = 8;
};

/// f(C): the matchings that contain every isolated edge of C and alternate
/// on every hexagon of C. Throws std::invalid_argument for an invalid cover.
HypercubeEmbedding clar_cover_to_hypercube(const HexagonalSystem& system, const ResonanceGraph& graph,
                                           const ClarCover& cover);

/// Inverse of f via the unique source of the oriented cube: its out-arc
/// hexagons plus the rest of the source matching as isolated edges. Throws
/// VerificationError when the cube has no source or several.
ClarCover hypercube_to_clar_cover(const HexagonalSystem& system, const ResonanceGraph& graph,
                                  const HypercubeEmbedding& cube);

/// zeta(H) == C(R(H)) plus per-dimension bijectivity of f in both directions.
VerificationReport verify_identity(const HexagonalSystem& system, const std::string& name,
                                   const VerifyOptions& options = {});

/// Cover order versus cube containment, and maximal elements on both sides.
/// Throws ResourceLimitError when the cover count exceeds options.poset_cap.
VerificationReport verify_poset_isomorphism(const HexagonalSystem& system, const std::string& name,
                                            const VerifyOptions& options = {});

/// Acyclicity, unique source and sink per cube, disjoint proper and improper
/// sextets, the 4-cycle property, and agreement of the source-based enumerator.
VerificationReport verify_orientation(const HexagonalSystem& system, const std::string& name,
                                      const VerifyOptions& options = {});

/// zeta^(s) == s! * sum over s-hexagon sextet patterns R of zeta(H - R), and the
/// same derivative by iterating single-hexagon deletions s times. Throws
/// std::invalid_argument unless 1 <= s <= Cl(H) + 1.
VerificationReport verify_derivative(const HexagonalSystem& system, const std::string& name, unsigned s,
                                     const VerifyOptions& options = {});

/// R(zigzag(n)) isomorphic to Gamma_n, zeta(zigzag(n)) == C(Gamma_n), and which
/// closed binomial form matches. Throws std::invalid_argument outside 1..bound.
VerificationReport verify_fibonacene(int n, const VerifyOptions& options = {});

/// R(H) is median; (x+1)-expansion of C(R(H)) is positive with constant 1 and
/// equals the proper-sextet histogram; alternating sum; monotone tail;
/// unimodality is recorded but never fails.
VerificationReport verify_median_and_expansion(const HexagonalSystem& system, const std::string& name,
                                               const VerifyOptions& options = {});

/// No roots in [-1, inf), a root in [-2, -1) when there are two or more
/// matchings, every rational root of the form -(t+1)/t.
VerificationReport verify_roots(const HexagonalSystem& system, const std::string& name,
                                const VerifyOptions& options = {});

/// Identity, poset (when within poset_cap), orientation, median/expansion and
/// root checks merged into one report. Non-Kekulean systems get identity,
/// poset and orientation only. Above median_bound matchings the median test is
/// left out but the expansion checks still run.
VerificationReport verify_all(const HexagonalSystem& system, const std::string& name,
                              const VerifyOptions& options = {});

/// Sum_k binomial(n - k + 1, k) (x+1)^k, or binomial(n - k, k) when `printed`.
IntPolynomial fibonacene_formula(int n, bool printed);
/// Sum_k binomial(n - k + 1, k) x^k, or binomial(n - k, k) when `printed`.
IntPolynomial fibonacene_sextet_formula(int n, bool printed);

}  // namespace clarcube
