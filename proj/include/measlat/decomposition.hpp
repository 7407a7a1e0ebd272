#pragma once

// Hahn and Jordan decompositions of signed measures on a finite space.

#include "measlat/measures.hpp"

namespace measlat {

/// X split into a set where the signed measure is nonnegative on every
/// subset and a set where it is nonpositive on every subset.
struct HahnDecomposition {
  MeasurableSet positive_set;
  MeasurableSet negative_set;
};

/// s = positive - negative with positive and negative mutually singular.
/// `negative` is always finite.
struct JordanPair {
  Measure positive;
  Measure negative;
};

/// Atoms of weight >= 0 form the positive set. Zero-weight atoms are null
/// for s, so sending them to the positive side is a convention.
HahnDecomposition hahn_decompose(const SignedMeasure& s);

/// Atom-wise positive and negative parts.
JordanPair jordan_decompose(const SignedMeasure& s);

/// positive - negative atom-wise. Always defined, since negative is finite
/// for any pair produced by jordan_decompose; throws UndefinedDifference for
/// a hand-built pair with an infinite negative weight.
SignedMeasure reconstruct(const JordanPair& pair);

/// sup { s(E) : E measurable, E subset of A }, by enumerating all subsets.
ExtSigned sup_over_subsets(const SignedMeasure& s, const MeasurableSet& a, std::size_t cap = kDefaultSetCap);
/// inf { s(E) : E measurable, E subset of A }, by enumerating all subsets.
ExtSigned inf_over_subsets(const SignedMeasure& s, const MeasurableSet& a, std::size_t cap = kDefaultSetCap);

} // namespace measlat
