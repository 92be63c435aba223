#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "fvinv/series.hpp"
#include "fvinv/subdivision.hpp"

namespace fvinv {

using Vertex = int;

/// A nonempty set of vertices, kept sorted and duplicate-free.
class Face {
 public:
  /// Sorts the input; throws InvalidComplexError if it is empty or has
  /// repeated vertices.
  explicit Face(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  bool contains(const Face& other) const;

  /// Lexicographic on the sorted vertex tuple.
  friend auto operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Complexes refuse to materialize more faces than this.
inline constexpr std::size_t kFaceGuard = 1'000'000;

/// Finite abstract simplicial complex, stored as its full (downward closed)
/// face set. The empty face is never included.
class Complex {
 public:
  /// Downward closure of `maximal`. Throws InvalidComplexError when the
  /// list is empty and FaceGuardError when the closure exceeds kFaceGuard.
  static Complex from_maximal(const std::vector<Face>& maximal);

  const std::set<Face>& faces() const noexcept { return faces_; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  int dimension() const;

  /// Faces not contained in any larger face, in lexicographic order.
  std::vector<Face> maximal_faces() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  explicit Complex(std::set<Face> faces) : faces_(std::move(faces)) {}
  friend Complex barycentric_subdivide(const Complex& c);

  std::set<Face> faces_;
};

/// The full n-simplex on vertices 0..n (2^(n+1) - 1 faces).
Complex simplex(int n);

/// Boundary of the n-simplex: all n-element subsets of {0..n}. Requires n >= 1.
Complex simplex_boundary(int n);

FVector f_vector(const Complex& c);

/// Alternating sum of the f-vector.
Integer chi(const Complex& c);

/// sum_k g_k f_k. Throws InsufficientPrecisionError when prec g <= dim c.
Coefficient chi_weighted(const Series& g, const Complex& c);

/// Barycentric subdivision by chain enumeration. Vertices of the result are
/// the faces of `c`, numbered 0, 1, ... in lexicographic order of their vertex
/// tuples; faces are chains of faces strictly ordered by inclusion.
/// Throws FaceGuardError when the result would exceed kFaceGuard faces.
Complex barycentric_subdivide(const Complex& c);

/// k-fold barycentric subdivision; iterate_sd(c, 0) == c.
Complex iterate_sd(const Complex& c, unsigned k);

} // namespace fvinv
