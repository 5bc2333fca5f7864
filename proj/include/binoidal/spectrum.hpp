#pragma once

#include "binoidal/presentation.hpp"
#include "binoidal/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace binoidal {

class RewriteSystem;

/// Presentations with more generators are refused by the subset scan unless
/// `force` is set.
inline constexpr std::size_t kMaxScanGenerators = 24;

struct SpectrumOptions {
  bool force = false;
  /// 0 = kernels::default_threads(); 1 runs the serial reference scan.
  int threads = 0;
};

/// The prime spectrum of a presented binoid. A prime is identified with the
/// set of generators it contains (bit i = generator i); a generator subset is
/// a prime iff its indicator map respects every relation.
class Spectrum {
public:
  static Spectrum compute(const Presentation& p, const SpectrumOptions& opts = {});

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  /// Increasing cardinality, then lexicographic on sorted indices.
  const std::vector<GenMask>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(GenMask a) const noexcept;
  std::size_t index_of(GenMask a) const;

  /// Union of all primes (the ideal of nonunits); 0 for the zero binoid.
  GenMask max_ideal() const noexcept { return max_ideal_; }
  /// Longest chain length; -1 for the zero binoid.
  int dim() const noexcept;
  /// Longest chain ending at the prime.
  int height(GenMask prime) const;
  /// Longest chain starting at the prime.
  int prime_dim(GenMask prime) const;

  /// Covering pairs (i, j) of prime indices with primes[i] below primes[j].
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  std::string format_prime(GenMask prime) const;

private:
  void compute_chains();

  std::vector<std::string> names_;
  std::vector<GenMask> primes_;
  std::vector<int> height_, coheight_;
  GenMask max_ideal_ = 0;
};

/// Order used for generator subsets throughout: size, then lexicographic on
/// sorted indices.
bool subset_order_less(GenMask a, GenMask b) noexcept;

/// Longest-chain data by quadratic comparison of all prime pairs; kept as
/// the reference for the subset dynamic program used by Spectrum.
void chain_lengths_pairwise(const std::vector<GenMask>& primes, std::vector<int>& height,
                            std::vector<int>& coheight);

int dim(const Presentation& p);

/// (F_0, ..., F_d) with F_i = number of primes of prime dimension i.
/// Throws PreconditionError("ZeroBinoid") on an empty spectrum.
std::vector<std::uint64_t> f_vector(const Spectrum& s);

std::vector<GenMask> minimal_primes(const Spectrum& s);
/// Minimal primes containing every word of `words` (inf is in every prime).
std::vector<GenMask> minimal_primes_over(const Spectrum& s, const std::vector<Word>& words);
/// Irreducible closed sets V(P), P minimal, each as a list of primes.
std::vector<std::vector<GenMask>> irreducible_components(const Spectrum& s);

bool prime_contains(GenMask prime, const Word& w) noexcept;
std::vector<GenMask> v_set(const Spectrum& s, const std::vector<Word>& words);
std::vector<GenMask> d_set(const Spectrum& s, const Word& w);
/// Closure of a set of primes: every prime containing one of them.
std::vector<GenMask> closure(const Spectrum& s, const std::vector<GenMask>& primes);

bool is_nilpotent(const Spectrum& s, const Word& w);
/// Membership of w in the radical of the ideal generated by `ideal`.
bool radical_membership(const Spectrum& s, const Word& w, const std::vector<Word>& ideal);

/// Inclusion-minimal generator sets meeting every set in `family`.
std::vector<GenMask> minimal_transversals(const std::vector<GenMask>& family);

struct Predicates {
  bool zero = false;
  bool integral = false;
  bool positive = false;
  bool reduced = false;
  bool binoid_group = false;
  bool boolean = false;
  /// Generators outside the maximal ideal.
  GenMask units = 0;
};

Predicates predicates(const Presentation& p, const Spectrum& s, const RewriteSystem& rs);
Predicates predicates(const Presentation& p);

/// The booleanization, realized as the intersection-closed family of basic
/// open sets D(f) of the spectrum plus the empty set.
struct FiniteBooleanBinoid {
  /// Each element is a set of spectrum indices. elements[identity] is the
  /// whole spectrum, elements[absorbing] is empty. Ordered by decreasing
  /// size, then lexicographically.
  std::vector<std::vector<bool>> elements;
  /// table[i][j] = index of elements[i] intersect elements[j].
  std::vector<std::vector<std::uint32_t>> table;
  /// Index of D(x_i) per generator.
  std::vector<std::uint32_t> generator_image;
  std::uint32_t identity = 0;
  std::uint32_t absorbing = 0;

  std::size_t size() const noexcept { return elements.size(); }
};

FiniteBooleanBinoid booleanize(const Spectrum& s);

/// Primes of the finite boolean binoid, each as the sorted list of element
/// indices it contains.
std::vector<std::vector<std::uint32_t>> boolean_spectrum(const FiniteBooleanBinoid& b);
/// Pullback of a prime of the booleanization along f -> D(f), as a generator
/// subset of the original presentation.
GenMask pullback_prime(const FiniteBooleanBinoid& b, const std::vector<std::uint32_t>& prime);

} // namespace binoidal
