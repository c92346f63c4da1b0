#pragma once

#include <vector>

#include "jmc/atoms.hpp"
#include "jmc/rg_tensor.hpp"
#include "jmc/segment.hpp"

namespace jmc {

/// Term counts per row of a closed-form expansion, so boundary behaviour of
/// the index ranges can be inspected from tests and the CLI.
struct RowCounts {
  long long signed_row = 0;  ///< terms with a signed-interval classical part
  long long lang_row = 0;    ///< terms with a Langlands-of-interval part
  long long cusp_row = 0;    ///< terms over the bare cuspidal
};

/// Options for mu_star_delta_signed. The middle row's published condition is
/// the strict i+j < -1; the non-strict variant exists only for sensitivity
/// probing and is never used by the verifier.
struct SignedOptions {
  bool strict_middle_row = true;
  RowCounts* rows = nullptr;  ///< filled when non-null
};

/// Full Jacquet restriction of an atom with a closed form: the cuspidal maps
/// to 1 (x) sigma, signed intervals to mu_star_delta_signed, interval
/// Langlands quotients to mu_star_langlands_segment. Anything else throws
/// std::invalid_argument ("no closed-form" — the verifier must use witness
/// facts for those).
RGTensor mu_star_base(const ClassAtom& x);

/// The structure formula for d(delta) x| base: the double sum over
/// 0 <= j <= i <= |delta| and over the terms of mu_star_base(base),
/// emitting d([i-y,-x]) x d([y+1-j,y]) x gl' (x) d([y+1-i,y-j]) x| cl'.
/// Empty factors drop; the output is canonical. Throws on an empty delta.
RGTensor mu_star_formula1(const Segment& delta, const ClassAtom& base);

/// One structure-formula layer on top of an already-computed restriction.
/// Pair-quotient GL keys of `inner` are resolved into the standard basis
/// before the extension multiplies GL parts.
RGTensor extend_by_formula1(const Segment& delta, const RGTensor& inner);

/// Left-to-right fold of the structure formula over a list of non-empty
/// factors; the result is independent of the fold order.
RGTensor mu_star_iterated(const std::vector<Segment>& segs, const ClassAtom& base);

/// Closed form for the signed-interval family d([-c,d]_sign; sigma): three
/// rows emitting signed-interval, interval-Langlands, and bare-cuspidal
/// classical parts. Emitted labels with negative center are flipped to their
/// canonical form; labels whose parameters fall outside the label's domain
/// name the zero representation and drop.
RGTensor mu_star_delta_signed(HalfInt c, HalfInt d, Sign sign, SignedOptions opts = {});

/// Closed form for the interval Langlands quotient L(d([-c,d]); sigma),
/// defined for c < 1/2 or 1/2 <= c < d: pair-quotient GL parts over
/// interval-Langlands classical parts under 0 <= i+j, plus the cuspidal row
/// i = 1/2..d. First-slot intervals shorter than empty annihilate their term.
RGTensor mu_star_langlands_segment(HalfInt c, HalfInt d);

/// True when some fully-restricted (cuspidal-level) term of the expansion
/// has all exponents >= 0; every word of one GL key shares its letter
/// multiset, so this decides existence of an all-nonnegative exponent word.
bool sign_classifier(const RGTensor& expansion);

}  // namespace jmc
