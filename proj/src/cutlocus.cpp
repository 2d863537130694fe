#include "subriemann/cutlocus.hpp"

#include <algorithm>
#include <cmath>

namespace subriemann {

namespace {

bool is_block_axis1(const CutLocusClass& k) { return k.block_residual <= kCutLocusTolerance; }

}  // namespace

std::string_view to_string(CutLocusTag tag) noexcept {
  switch (tag) {
    case CutLocusTag::NotCut: return "NotCut";
    case CutLocusTag::Sym: return "Sym";
    case CutLocusTag::Loc: return "Loc";
  }
  return "unknown";
}

CutLocusClass classify_cut_locus_so3(const SO3Element& c) {
  CutLocusClass k;
  k.identity_residual = c.deviation_from_identity();
  k.involution_residual = so3_mul(c, c).deviation_from_identity();
  k.block_residual = std::max({std::abs(c(0, 0) - 1.0), std::abs(c(0, 1)), std::abs(c(0, 2)), std::abs(c(1, 0)),
                               std::abs(c(2, 0))});

  if (k.identity_residual <= kCutLocusTolerance) {
    k.tag = CutLocusTag::NotCut;
  } else if (k.involution_residual <= kCutLocusTolerance) {
    k.tag = CutLocusTag::Sym;
  } else if (is_block_axis1(k)) {
    k.tag = CutLocusTag::Loc;
  } else {
    k.tag = CutLocusTag::NotCut;
  }
  return k;
}

CutLocusTag in_cut_locus_su2_L2(const SU2Element& g) {
  if (std::abs(g.a_re()) <= kCutLocusTolerance) return CutLocusTag::Sym;
  if (std::abs(g.b()) <= kCutLocusTolerance && std::abs(g.a_im()) > kCutLocusTolerance) return CutLocusTag::Loc;
  return CutLocusTag::NotCut;
}

bool conjugate_locus_so3(const SO3Element& c) {
  const CutLocusClass k = classify_cut_locus_so3(c);
  return k.identity_residual > kCutLocusTolerance && is_block_axis1(k);
}

}  // namespace subriemann
