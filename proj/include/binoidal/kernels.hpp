#pragma once

// Data-parallel kernels. Each OpenMP version has a serial reference with the
// same contract; tests compare them and bench/ times them against each other.

#include "binoidal/presentation.hpp"
#include "binoidal/word.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace binoidal::kernels {

/// Indicator constraint of one relation: a generator subset A passes iff
/// (lhs meets A) <=> (rhs_inf or rhs meets A).
struct AdmissibilityRow {
  GenMask lhs = 0;
  GenMask rhs = 0;
  bool rhs_inf = false;
};

std::vector<AdmissibilityRow> admissibility_rows(const Presentation& p);

inline bool admissible(std::span<const AdmissibilityRow> rows, GenMask a) noexcept {
  for (const auto& row : rows) {
    const bool l = (row.lhs & a) != 0;
    const bool r = row.rhs_inf || (row.rhs & a) != 0;
    if (l != r) return false;
  }
  return true;
}

/// All admissible subsets of {0..rank-1}, ascending as integers.
std::vector<GenMask> scan_admissible_serial(std::span<const AdmissibilityRow> rows, std::size_t rank);
std::vector<GenMask> scan_admissible_parallel(std::span<const AdmissibilityRow> rows, std::size_t rank,
                                              int threads = 0);

/// Number of assignments generators -> F_q (q prime) under which every
/// relation holds multiplicatively, with inf evaluating to 0 and the empty
/// word to 1.
std::uint64_t count_maps_serial(const Presentation& p, std::uint64_t q);
std::uint64_t count_maps_parallel(const Presentation& p, std::uint64_t q, int threads = 0);

/// Threads used when a kernel is passed threads == 0: BINOIDAL_THREADS if
/// set, else the OpenMP default.
int default_threads();
/// Process-wide override used by default_threads(); n <= 0 clears it.
void set_default_threads(int n);

} // namespace binoidal::kernels
