#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "htsim/model.hpp"

namespace htsim {

/// Occupation-number eigenstate of the free Hamiltonian. Only modes with
/// occupation >= 1 are stored, sorted by mode index; mode indices may be
/// negative. The default-constructed state is the Fock vacuum.
class FockState {
 public:
  using Entry = std::pair<std::int32_t, std::int32_t>;  // (mode n, occupation r_n)

  FockState() = default;
  FockState(std::initializer_list<Entry> occupations);

  /// Occupation of a mode (0 when absent).
  int occupation(int mode) const;

  /// Sets r_n; an occupation of 0 removes the entry. Negative occupations are
  /// rejected.
  void setOccupation(int mode, int occ);

  /// Adds delta to r_n (delta may be negative, result must stay >= 0).
  void addOccupation(int mode, int delta);

  const std::vector<Entry>& entries() const { return occ_; }
  bool isVacuum() const { return occ_.empty(); }

  int particleNumber() const;

  /// Total momentum in exact integer units of 2*pi/L.
  std::int64_t totalMomentum() const;

  /// Largest |mode| occupied (0 for the vacuum).
  int maxAbsMode() const;

  bool operator==(const FockState&) const = default;

 private:
  std::vector<Entry> occ_;
};

/// Sum of r_n * omega_n over occupied modes (ascending mode order, so the
/// result is bit-for-bit reproducible).
double stateEnergy(const FockState& s, const ModelParams& p);

/// Spatial reflection: occupation of mode n moves to mode -n. An involution.
FockState parityImage(const FockState& s);

/// Fixed total order on occupation maps: particle number first, then the
/// (mode, occupation) list compared lexicographically.
std::strong_ordering canonicalOrder(const FockState& a, const FockState& b);

/// True when s is the canonical representative of its parity orbit,
/// i.e. s <= parityImage(s) in the canonical order.
bool isCanonicalRepresentative(const FockState& s);

/// min(s, parityImage(s)) in the canonical order.
FockState canonicalRepresentative(const FockState& s);

struct FockStateHash {
  std::size_t operator()(const FockState& s) const noexcept;
};

}  // namespace htsim
