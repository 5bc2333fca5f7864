#pragma once

#include "binoidal/format.hpp"
#include "binoidal/presentation.hpp"
#include "binoidal/word.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binoidal {

/// Z^rank + Z/d_1 + ... + Z/d_k with d_i | d_{i+1} and every d_i >= 2.
struct AbelianGroupData {
  std::size_t rank = 0;
  std::vector<mpz_class> invariant_factors;
  friend bool operator==(const AbelianGroupData&, const AbelianGroupData&) = default;
};

std::string to_string(const AbelianGroupData& g);

/// Binoid algebra K[M]: variables X1..Xr, one ideal generator per relation
/// (X^u - X^v for binomials, X^u for monomials).
std::string export_algebra(const Presentation& p, AlgebraFormat format);
/// The ideal generators alone, in relation order.
std::vector<std::string> algebra_ideal_generators(const Presentation& p);

/// Cokernel of the integer matrix (rows are relations) over Z^columns.
AbelianGroupData smith_normal_form(const std::vector<std::vector<mpz_class>>& rows, std::size_t columns);
AbelianGroupData smith_normal_form(const std::vector<std::vector<long long>>& rows, std::size_t columns);

/// Difference group of M/P restricted to the generators outside P. Throws
/// PreconditionError("NotPrime") if the generator set is not admissible.
AbelianGroupData diff_group_at(const Presentation& p, GenMask prime);

struct PrimePointCount {
  GenMask prime = 0;
  AbelianGroupData group;
  mpz_class count;
};

struct PointCount {
  std::uint64_t q = 0;
  mpz_class total;
  std::vector<PrimePointCount> per_prime;
};

/// Number of binoid maps M -> (F_q, *, 1, 0). Throws
/// PreconditionError("NotPrimePower").
PointCount count_points(const Presentation& p, std::uint64_t q);

inline constexpr std::uint64_t kMaxBruteForceMaps = 10'000'000;

/// Enumerates all q^r assignments; q must be prime. threads as in
/// SpectrumOptions. Throws PreconditionError("NotPrime") or
/// ("BoundExceeded").
std::uint64_t brute_force_count(const Presentation& p, std::uint64_t q, int threads = 0);

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

enum class Connectedness { Connected, Disconnected, OutOfScope };
enum class HypersurfaceCase { UnitRelation, SharedFactor, DisjointTops, Monomial };

struct ConnectednessVerdict {
  Connectedness verdict = Connectedness::OutOfScope;
  HypersurfaceCase relation_case = HypersurfaceCase::Monomial;
  /// Idempotent e with e not 0 and not inf; absent for torsion in the unit
  /// relation case, where the binoid has no such element.
  std::optional<Word> idempotent_witness;
};

const char* to_string(Connectedness c);
const char* to_string(HypersurfaceCase c);

/// Connectedness of K-spec for one relation f = g on free generators, K of
/// characteristic zero and algebraically closed. Throws InvalidInput for any
/// other shape of presentation.
ConnectednessVerdict hypersurface_connectedness(const Presentation& p);

enum class OneGeneratedKind { Free, CyclicGroup, Loop, Truncated };

struct OneGenerated {
  OneGeneratedKind kind = OneGeneratedKind::Free;
  /// Loop and CyclicGroup: r x = s x is the first repetition (r = 0 for the
  /// group, whose order is s). Truncated: m x = inf first at m = s.
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  /// s - r for loops and groups.
  std::uint64_t length() const noexcept { return s - r; }
  std::string label() const;
};

/// Throws InvalidInput unless p has exactly one generator.
OneGenerated classify_one_generated(const Presentation& p);

struct TorsionReport {
  AbelianGroupData group;
  bool torsion_free = false;
  /// The verdict is about M only when M is cancellative.
  static constexpr const char* hypothesis = "M is cancellative";
};

/// Difference group at the minimal prime {g : g = inf}. Throws
/// PreconditionError("NotIntegral").
TorsionReport torsion_free_cancellative_quotient(const Presentation& p);

} // namespace binoidal
