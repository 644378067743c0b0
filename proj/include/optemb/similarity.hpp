#pragma once

#include <string>
#include <variant>

#include "optemb/mat3.hpp"

namespace optemb {

struct ScalarClass {
  ResidueElem x;
};
/// diag(x, x, y) with x != y; x is the eigenvalue of multiplicity 2.
struct TwoEigenClass {
  ResidueElem x, y;
};
/// [[x,0,0],[0,x,1],[0,0,x]].
struct JordanClass {
  ResidueElem x;
};
/// [[0,1,0],[0,0,1],[x,y,z]], characteristic polynomial t^3 - z t^2 - y t - x.
struct CompanionClass {
  ResidueElem x, y, z;
};

using SimilarityClass = std::variant<ScalarClass, TwoEigenClass, JordanClass, CompanionClass>;

std::string class_name(const SimilarityClass& c);
/// e.g. "TwoEigen(1;0)"; parameters are separated by ';' since entries of
/// F_{p^f} print with commas.
std::string to_string(const SimilarityClass& c);
bool operator==(const SimilarityClass& a, const SimilarityClass& b);
Mat3R canonical_matrix(const SimilarityClass& c);

/// det(tI - M), low degree first, monic of degree 3.
ResiduePoly char_poly(const Mat3R& m);
/// Least d with I, M, ..., M^d dependent; monic.
ResiduePoly min_poly(const Mat3R& m);

struct Classification {
  SimilarityClass cls;
  /// V^{-1} M V == canonical_matrix(cls).
  Mat3R conjugator;
};

Classification residue_classify(const Mat3R& m);

}  // namespace optemb
