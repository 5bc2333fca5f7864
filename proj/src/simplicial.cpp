#include "binoidal/simplicial.hpp"

#include "binoidal/error.hpp"
#include "binoidal/rewrite.hpp"
#include "binoidal/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace binoidal {
namespace {

GenMask bit(std::size_t i) { return GenMask{1} << i; }

void check_enumerable(const SimplicialComplex& c, bool force) {
  if (c.num_vertices() > kMaxEnumerableVertices && !force)
    throw PreconditionError("TooManyVertices", std::to_string(c.num_vertices()) + " vertices exceed the limit of " +
                                                   std::to_string(kMaxEnumerableVertices) + " (use --force)");
}

std::vector<GenMask> maximal_of(std::vector<GenMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<GenMask> out;
  for (GenMask s : sets) {
    bool covered = false;
    for (GenMask t : sets)
      if (t != s && (s & t) == s) covered = true;
    if (!covered) out.push_back(s);
  }
  return out;
}

std::vector<std::string> unique_names(std::vector<std::string> names) {
  std::set<std::string> taken;
  for (auto& n : names) {
    while (taken.count(n)) n += "_";
    taken.insert(n);
  }
  return names;
}

// Vertices of `a` and `b` side by side, suffixing collisions.
std::vector<std::string> combined_vertices(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> in_a(a.vertices().begin(), a.vertices().end());
  std::set<std::string> in_b(b.vertices().begin(), b.vertices().end());
  std::vector<std::string> out;
  for (const auto& v : a.vertices()) out.push_back(in_b.count(v) ? v + "_1" : v);
  for (const auto& v : b.vertices()) out.push_back(in_a.count(v) ? v + "_2" : v);
  return unique_names(std::move(out));
}

} // namespace

bool SimplicialComplex::is_face(GenMask s) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [s](GenMask f) { return (s & f) == s; });
}

int SimplicialComplex::dimension() const noexcept {
  int d = -1;
  for (GenMask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

SimplicialComplex from_facet_masks(std::vector<std::string> vertices, std::vector<GenMask> facets) {
  if (vertices.size() > kMaxGenerators)
    throw InvalidInput("at most " + std::to_string(kMaxGenerators) + " vertices are supported");
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (v.empty()) throw InvalidInput("empty vertex name");
    if (!seen.insert(v).second) throw InvalidInput("duplicate vertex '" + v + "'");
  }
  const GenMask all = vertices.size() == 64 ? ~GenMask{0} : bit(vertices.size()) - 1;
  for (GenMask f : facets)
    if (f & ~all) throw InvalidInput("facet uses a vertex outside the vertex set");
  if (facets.empty()) facets.push_back(0);
  const bool has_empty = std::find(facets.begin(), facets.end(), GenMask{0}) != facets.end();
  const bool has_nonempty = std::any_of(facets.begin(), facets.end(), [](GenMask f) { return f != 0; });
  if (has_empty && has_nonempty) throw InvalidInput("empty facet alongside nonempty facets");
  GenMask covered = 0;
  for (GenMask f : facets) covered |= f;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!(covered & bit(i))) throw InvalidInput("vertex '" + vertices[i] + "' lies in no facet");

  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  c.facets_ = maximal_of(std::move(facets));
  std::sort(c.facets_.begin(), c.facets_.end(), subset_order_less);
  return c;
}

SimplicialComplex from_facets(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& facets) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<GenMask> masks;
  for (const auto& f : facets) {
    GenMask m = 0;
    for (const auto& v : f) {
      auto it = index.find(v);
      if (it == index.end()) throw InvalidInput("facet vertex '" + v + "' is not a declared vertex");
      if (it->second < kMaxGenerators) m |= bit(it->second);
    }
    masks.push_back(m);
  }
  return from_facet_masks(std::move(vertices), std::move(masks));
}

std::vector<GenMask> faces(const SimplicialComplex& c, bool force) {
  check_enumerable(c, force);
  std::unordered_set<GenMask> all;
  for (GenMask f : c.facets()) {
    // Every submask of f, including f and 0.
    for (GenMask s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<GenMask> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), subset_order_less);
  return out;
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& c, bool force) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(c.dimension() + 2), 0);
  for (GenMask s : faces(c, force)) ++f[static_cast<std::size_t>(popcount(s))];
  return f;
}

std::vector<GenMask> minimal_nonfaces(const SimplicialComplex& c, bool force) {
  check_enumerable(c, force);
  const std::size_t n = c.num_vertices();
  std::vector<GenMask> out;
  // Level k holds the faces of size k; a (k+1)-set all of whose k-subsets are
  // faces is either a face or a minimal nonface.
  std::vector<GenMask> level{0};
  while (!level.empty()) {
    std::unordered_set<GenMask> current(level.begin(), level.end());
    std::set<GenMask> next_faces, found;
    for (GenMask s : level) {
      const int top = s ? 63 - __builtin_clzll(s) : -1;
      for (std::size_t v = static_cast<std::size_t>(top + 1); v < n; ++v) {
        const GenMask t = s | bit(v);
        bool all_faces = true;
        for (GenMask rest = t; rest && all_faces; rest &= rest - 1) {
          const GenMask sub = t & ~(rest & (~rest + 1));
          all_faces = current.count(sub) > 0;
        }
        if (!all_faces) continue;
        if (c.is_face(t))
          next_faces.insert(t);
        else
          found.insert(t);
      }
    }
    out.insert(out.end(), found.begin(), found.end());
    level.assign(next_faces.begin(), next_faces.end());
  }
  std::sort(out.begin(), out.end(), subset_order_less);
  return out;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c) {
  const std::size_t n = c.num_vertices();
  if (n == 0) return {c};
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (GenMask f : c.facets()) {
    if (!f) continue;
    const auto first = static_cast<std::size_t>(__builtin_ctzll(f));
    for (GenMask rest = f; rest; rest &= rest - 1)
      parent[find(static_cast<std::size_t>(__builtin_ctzll(rest)))] = find(first);
  }
  std::vector<SimplicialComplex> out;
  std::vector<bool> done(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (done[root]) continue;
    done[root] = true;
    std::vector<std::size_t> members;
    for (std::size_t u = 0; u < n; ++u)
      if (find(u) == root) members.push_back(u);
    std::vector<std::string> names;
    for (std::size_t u : members) names.push_back(c.vertices()[u]);
    std::vector<GenMask> facets;
    for (GenMask f : c.facets()) {
      if (find(static_cast<std::size_t>(__builtin_ctzll(f))) != root) continue;
      GenMask g = 0;
      for (std::size_t k = 0; k < members.size(); ++k)
        if (f & bit(members[k])) g |= bit(k);
      facets.push_back(g);
    }
    out.push_back(from_facet_masks(std::move(names), std::move(facets)));
  }
  return out;
}

std::string vertex_generator_name(const std::string& vertex) {
  return is_identifier(vertex) && vertex != "inf" ? vertex : "v" + vertex;
}

Presentation simplicial_binoid(const SimplicialComplex& c, bool force) {
  const std::size_t n = c.num_vertices();
  std::vector<std::string> names;
  for (const auto& v : c.vertices()) names.push_back(vertex_generator_name(v));
  names = unique_names(std::move(names));
  std::vector<std::pair<Word, Word>> rels;
  for (GenMask s : minimal_nonfaces(c, force)) {
    Word w = Word::zero(n);
    for (std::size_t i = 0; i < n; ++i)
      if (s & bit(i)) w[i] = 1;
    rels.emplace_back(w, Word::inf());
  }
  return make_presentation(std::move(names), std::move(rels));
}

Presentation delta_cup_binoid(const SimplicialComplex& c, bool force) {
  const Presentation m = simplicial_binoid(c, force);
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& rel : m.relations()) rels.emplace_back(rel.lhs, rel.rhs);
  for (std::size_t i = 0; i < m.rank(); ++i)
    rels.emplace_back(Word::generator(m.rank(), i, 2), Word::generator(m.rank(), i));
  return make_presentation(m.generators(), std::move(rels));
}

RecognitionResult recognize_simplicial(const Presentation& p) {
  return recognize_simplicial(p, RewriteSystem::complete(p));
}

RecognitionResult recognize_simplicial(const Presentation& p, const RewriteSystem& rs) {
  const std::size_t r = p.rank();
  const Spectrum s = Spectrum::compute(p);
  if (s.empty()) return {std::nullopt, "zero binoid"};
  if (!rs.monomial_only()) return {std::nullopt, "not semifree"};
  if (!predicates(p, s, rs).reduced) return {std::nullopt, "not reduced"};

  // Generators equal to inf drop out; the rest become vertices.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r; ++i)
    if (!rs.is_inf(Word::generator(r, i))) keep.push_back(i);
  std::vector<GenMask> nonfaces;
  for (const auto& rule : rs.rules()) {
    if (rule.lhs.degree() != static_cast<std::uint64_t>(popcount(rule.lhs.support()))) continue;
    GenMask m = 0;
    bool inside = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (!rule.lhs[i]) continue;
      auto it = std::find(keep.begin(), keep.end(), i);
      if (it == keep.end()) inside = false;
      else m |= bit(static_cast<std::size_t>(it - keep.begin()));
    }
    if (inside) nonfaces.push_back(m);
  }
  // Facets are the complements of the minimal sets meeting every nonface.
  const GenMask all = keep.size() == 64 ? ~GenMask{0} : bit(keep.size()) - 1;
  std::vector<GenMask> facets;
  for (GenMask t : minimal_transversals(nonfaces)) facets.push_back(all & ~t);
  std::vector<std::string> names;
  for (std::size_t i : keep) names.push_back(p.generators()[i]);
  return {from_facet_masks(std::move(names), std::move(facets)), {}};
}

std::string sr_generators(const SimplicialComplex& c, const std::string& prefix, bool force) {
  std::string out;
  for (GenMask s : minimal_nonfaces(c, force)) {
    if (!out.empty()) out += ", ";
    std::string mono;
    for (std::size_t i = 0; i < c.num_vertices(); ++i) {
      if (!(s & bit(i))) continue;
      if (!mono.empty()) mono += '*';
      mono += prefix + std::to_string(i + 1);
    }
    out += mono;
  }
  return out.empty() ? "0" : out;
}

std::string sr_ideal(const SimplicialComplex& c, const std::string& prefix, SrFormat format, bool force) {
  std::vector<std::string> gens;
  const std::string joined = sr_generators(c, prefix, force);
  if (joined != "0") {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = joined.find(", ", start);
      gens.push_back(joined.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 2;
    }
  }
  return format_algebra(c.num_vertices(), gens, format, prefix);
}

namespace {

ComponentShape shape_of(const SimplicialComplex& c) {
  const std::size_t n = c.num_vertices();
  if (n == 1) return ComponentShape::Point;
  const auto& f = c.facets();
  if (n >= 3 && f.size() == n &&
      std::all_of(f.begin(), f.end(), [n](GenMask s) { return static_cast<std::size_t>(popcount(s)) == n - 1; }))
    return ComponentShape::SimplexBoundary;
  if (n >= 4 && c.dimension() == 1 &&
      std::all_of(f.begin(), f.end(), [](GenMask s) { return popcount(s) == 2; })) {
    bool two_each = true;
    for (std::size_t v = 0; v < n; ++v)
      two_each = two_each && std::count_if(f.begin(), f.end(), [v](GenMask s) { return (s & bit(v)) != 0; }) == 2;
    // Connected and 2-regular: a single cycle.
    if (two_each) return ComponentShape::Cycle;
  }
  return ComponentShape::Other;
}

} // namespace

CapClassification cap_classification(const SimplicialComplex& c) {
  CapClassification out;
  out.components = connected_components(c);
  out.isomorphic = true;
  for (const auto& comp : out.components) {
    out.shapes.push_back(comp.num_vertices() == 0 ? ComponentShape::Other : shape_of(comp));
    out.isomorphic = out.isomorphic && out.shapes.back() != ComponentShape::Other;
  }
  return out;
}

const char* to_string(ComponentShape s) {
  switch (s) {
  case ComponentShape::Point: return "Point";
  case ComponentShape::SimplexBoundary: return "SimplexBoundary";
  case ComponentShape::Cycle: return "Cycle";
  case ComponentShape::Other: return "Other";
  }
  return "Other";
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto names = combined_vertices(a, b);
  if (names.size() > kMaxGenerators) throw InvalidInput("too many vertices");
  std::vector<GenMask> facets;
  for (GenMask f : a.facets())
    if (f) facets.push_back(f);
  for (GenMask f : b.facets())
    if (f) facets.push_back(f << a.num_vertices());
  return from_facet_masks(std::move(names), std::move(facets));
}

SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto names = combined_vertices(a, b);
  if (names.size() > kMaxGenerators) throw InvalidInput("too many vertices");
  std::vector<GenMask> facets;
  for (GenMask f : a.facets())
    for (GenMask g : b.facets()) facets.push_back(f | (g << a.num_vertices()));
  return from_facet_masks(std::move(names), std::move(facets));
}

std::string to_string(const SimplicialComplex& c) {
  std::string out = "complex{";
  for (std::size_t i = 0; i < c.num_vertices(); ++i) out += (i ? "," : "") + c.vertices()[i];
  out += "; ";
  bool first = true;
  for (GenMask f : c.facets()) {
    out += first ? "{" : ", {";
    first = false;
    bool first_v = true;
    for (std::size_t i = 0; i < c.num_vertices(); ++i)
      if (f & bit(i)) {
        out += (first_v ? "" : ",") + c.vertices()[i];
        first_v = false;
      }
    out += "}";
  }
  return out + "}";
}

} // namespace binoidal
