#pragma once

#include "binoidal/format.hpp"
#include "binoidal/presentation.hpp"
#include "binoidal/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binoidal {

class RewriteSystem;

/// Finite simplicial complex stored by its facets. Vertex i is bit i of a
/// facet mask.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// Facets in canonical order: increasing size, then lexicographic on
  /// sorted vertex indices.
  const std::vector<GenMask>& facets() const noexcept { return facets_; }

  bool is_face(GenMask s) const noexcept;
  /// dim of the complex: max facet size - 1; -1 for the complex {empty}.
  int dimension() const noexcept;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  friend SimplicialComplex from_facet_masks(std::vector<std::string>, std::vector<GenMask>);
  std::vector<std::string> vertices_;
  std::vector<GenMask> facets_;
};

/// Validates and prunes to maximal facets. Throws InvalidInput if a vertex
/// lies in no facet, an empty facet sits beside nonempty ones, or names
/// repeat.
SimplicialComplex from_facet_masks(std::vector<std::string> vertices, std::vector<GenMask> facets);
SimplicialComplex from_facets(std::vector<std::string> vertices,
                              const std::vector<std::vector<std::string>>& facets);

/// Complexes with more vertices are refused by face enumeration unless
/// `force` is set.
inline constexpr std::size_t kMaxEnumerableVertices = 24;

/// Every face (including the empty one), sorted by size then lexicographically.
std::vector<GenMask> faces(const SimplicialComplex& c, bool force = false);

/// (f_{-1}, f_0, ..., f_d).
std::vector<std::uint64_t> f_vector(const SimplicialComplex& c, bool force = false);

/// Inclusion-minimal subsets of V contained in no facet.
std::vector<GenMask> minimal_nonfaces(const SimplicialComplex& c, bool force = false);

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c);

/// Generator name used for a vertex in presentations: the vertex name if it
/// is an identifier, otherwise "v" + name.
std::string vertex_generator_name(const std::string& vertex);

/// M_Delta: free(V) modulo sum(F) = inf for each minimal nonface F.
Presentation simplicial_binoid(const SimplicialComplex& c, bool force = false);

/// M_Delta plus 2v = v for every vertex; presents the union binoid.
Presentation delta_cup_binoid(const SimplicialComplex& c, bool force = false);

struct RecognitionResult {
  std::optional<SimplicialComplex> complex;
  /// Empty on success, else the failed axiom ("not semifree", "not reduced",
  /// "zero binoid").
  std::string failure;
};

/// Decides whether p presents a simplicial binoid and if so recovers the
/// complex on the generators that are not inf.
RecognitionResult recognize_simplicial(const Presentation& p);
RecognitionResult recognize_simplicial(const Presentation& p, const RewriteSystem& rs);

using SrFormat = AlgebraFormat;

/// Generators of the Stanley-Reisner ideal, e.g. "X1*X3, X2*X4"; "0" if
/// there are none.
std::string sr_generators(const SimplicialComplex& c, const std::string& prefix = "X",
                          bool force = false);
/// Ring header plus ideal in the requested syntax.
std::string sr_ideal(const SimplicialComplex& c, const std::string& prefix, SrFormat format,
                     bool force = false);

enum class ComponentShape { Point, SimplexBoundary, Cycle, Other };

struct CapClassification {
  std::vector<SimplicialComplex> components;
  std::vector<ComponentShape> shapes;
  /// True iff every component is a point, a simplex boundary or a cycle;
  /// then the intersection and union binoids of the complex are isomorphic.
  bool isomorphic;
};

CapClassification cap_classification(const SimplicialComplex& c);
const char* to_string(ComponentShape s);

/// Vertex names colliding between the inputs get suffixes _1 and _2.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Facets are the pairwise unions (the join).
SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b);

std::string to_string(const SimplicialComplex& c);

} // namespace binoidal
