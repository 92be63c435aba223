#include "fvinv/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "fvinv/errors.hpp"

namespace fvinv {

namespace {

// A face with more vertices than this already has more than kFaceGuard
// nonempty subsets.
constexpr std::size_t kMaxFaceSize = 20;

[[noreturn]] void guard_exceeded() {
  throw FaceGuardError("complex would exceed " + std::to_string(kFaceGuard) + " faces");
}

Face subface(const std::vector<Vertex>& vertices, std::uint32_t mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.push_back(vertices[i]);
  return Face(std::move(out));
}

} // namespace

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidComplexError("faces must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InvalidComplexError("face has a repeated vertex");
}

bool Face::contains(const Face& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

Complex Complex::from_maximal(const std::vector<Face>& maximal) {
  if (maximal.empty()) throw InvalidComplexError("a complex needs at least one face");
  std::set<Face> faces;
  for (const Face& top : maximal) {
    if (top.size() > kMaxFaceSize) guard_exceeded();
    const std::uint32_t full = (std::uint32_t{1} << top.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      faces.insert(subface(top.vertices(), mask));
      if (faces.size() > kFaceGuard) guard_exceeded();
    }
  }
  return Complex(std::move(faces));
}

int Complex::dimension() const {
  int dim = -1;
  for (const Face& f : faces_) dim = std::max(dim, f.dimension());
  return dim;
}

std::vector<Face> Complex::maximal_faces() const {
  // A face is maximal iff adding any single vertex leaves the complex.
  std::vector<Vertex> vertices;
  for (const Face& f : faces_)
    if (f.size() == 1) vertices.push_back(f.vertices().front());
  std::vector<Face> out;
  for (const Face& f : faces_) {
    const bool maximal = std::none_of(vertices.begin(), vertices.end(), [&](Vertex v) {
      if (std::binary_search(f.vertices().begin(), f.vertices().end(), v)) return false;
      std::vector<Vertex> grown = f.vertices();
      grown.push_back(v);
      return faces_.count(Face(std::move(grown))) > 0;
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

Complex simplex(int n) {
  if (n < 0) throw InvalidComplexError("simplex dimension must be nonnegative");
  if (static_cast<std::size_t>(n) + 1 > kMaxFaceSize) guard_exceeded();
  std::vector<Vertex> vs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) vs[i] = i;
  return Complex::from_maximal({Face(std::move(vs))});
}

Complex simplex_boundary(int n) {
  if (n < 1) throw InvalidComplexError("simplex boundary needs dimension >= 1");
  std::vector<Face> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<Vertex> vs;
    for (int i = 0; i <= n; ++i)
      if (i != skip) vs.push_back(i);
    facets.emplace_back(std::move(vs));
  }
  return Complex::from_maximal(facets);
}

FVector f_vector(const Complex& c) {
  if (c.faces().empty()) throw InvalidComplexError("empty complex has no f-vector");
  FVector f(static_cast<std::size_t>(c.dimension()) + 1, Integer(0));
  for (const Face& face : c.faces()) f[face.size() - 1] += 1;
  return f;
}

Integer chi(const Complex& c) {
  Integer sum = 0;
  const FVector f = f_vector(c);
  for (std::size_t k = 0; k < f.size(); ++k) sum += k % 2 == 0 ? f[k] : Integer(-f[k]);
  return sum;
}

Coefficient chi_weighted(const Series& g, const Complex& c) {
  const FVector f = f_vector(c);
  if (g.precision() < f.size())
    throw InsufficientPrecisionError("weight series of precision " +
                                     std::to_string(g.precision()) +
                                     " cannot weigh a complex of dimension " +
                                     std::to_string(f.size() - 1));
  Coefficient sum = 0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += g[k] * Coefficient(f[k]);
  return sum;
}

Complex barycentric_subdivide(const Complex& c) {
  // std::set<Face> is already in lexicographic order of vertex tuples.
  std::map<Face, Vertex> id;
  for (const Face& f : c.faces()) id.emplace(f, static_cast<Vertex>(id.size()));

  // Every chain has a unique largest element `top`; the rest of the chain is
  // a chain of proper nonempty subsets of top, enumerated on bitmasks.
  std::set<Face> out;
  std::vector<Vertex> chain;
  for (const Face& top : c.faces()) {
    const auto& vs = top.vertices();
    auto extend = [&](auto&& self, std::uint32_t mask) -> void {
      std::vector<Vertex> sorted = chain;
      out.insert(Face(std::move(sorted)));
      if (out.size() > kFaceGuard) guard_exceeded();
      for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
        chain.push_back(id.at(subface(vs, sub)));
        self(self, sub);
        chain.pop_back();
      }
    };
    chain.assign(1, id.at(top));
    extend(extend, (std::uint32_t{1} << vs.size()) - 1);
  }
  return Complex(std::move(out));
}

Complex iterate_sd(const Complex& c, unsigned k) {
  Complex cur = c;
  for (unsigned i = 0; i < k; ++i) cur = barycentric_subdivide(cur);
  return cur;
}

} // namespace fvinv
