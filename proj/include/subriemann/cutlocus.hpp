#pragma once

// Cut locus of the identity in (SO(3), d), and its description in SU(2)
// coordinates for the lens space L(2, 1) = SO(3).
//
//   Sym: involutions M != E (M^2 = E), i.e. half-turns.
//   Loc: block-diag(1, R) with R in SO(2), R != I; this set is also the conjugate locus.
//
// The half-turn about the first axis lies in both descriptions and is reported as Sym.

#include <string>
#include <string_view>

#include "subriemann/algebra.hpp"

namespace subriemann {

enum class CutLocusTag { NotCut, Sym, Loc };

std::string_view to_string(CutLocusTag tag) noexcept;

struct CutLocusClass {
  CutLocusTag tag = CutLocusTag::NotCut;
  double identity_residual = 0.0;  // max |C - E|
  double involution_residual = 0.0;  // max |C^2 - E|
  double block_residual = 0.0;  // max deviation of the first row/column from (1, 0, 0)
};

inline constexpr double kCutLocusTolerance = 1e-9;

CutLocusClass classify_cut_locus_so3(const SO3Element& c);

/// p = 2 membership in SU(2) coordinates: Sym when Re(A) = 0, Loc when B = 0 and Im(A) != 0.
CutLocusTag in_cut_locus_su2_L2(const SU2Element& g);

/// Membership in the axis-1 block set minus E. Unlike the Loc tag this includes
/// the axis-1 half-turn.
bool conjugate_locus_so3(const SO3Element& c);

}  // namespace subriemann
