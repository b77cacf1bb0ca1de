#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mlat {

/// The fifteen submonoid functors.  O is the trivial submonoid, I the whole
/// monoid, E the submonoid generated by the idempotents, G/GL/GR the two- and
/// one-sided unit submonoids, GLR the submonoid generated by all one-sided
/// units, and F/FL/FR/FLR the submonoids generated by the idempotents
/// together with the respective unit sets.  Q, P, PL, PR are the compositions
/// E, F, FL, FR applied after GLR.
enum class FunctorId : std::uint8_t {
  O,
  E,
  G,
  GL,
  GR,
  GLR,
  F,
  FL,
  FR,
  FLR,
  Q,
  P,
  PL,
  PR,
  I,
};

inline constexpr int kFunctorCount = 15;

/// The eleven generating functors (everything except Q, P, PL, PR).
const std::array<FunctorId, 11>& plain_functors();

/// All fifteen functors in declaration order.
const std::array<FunctorId, 15>& all_functors();

std::string_view functor_name(FunctorId x);

/// Case-insensitive parse of a functor token ("gl", "FLR", ...).
std::optional<FunctorId> parse_functor(std::string_view token);

/// Rank used to order functor names inside node labels and to order lattice
/// nodes deterministically: O < E < G < GL < GR < GLR < Q < P < PL < PR
/// < F < FL < FR < FLR < I.
int functor_label_rank(FunctorId x);

}  // namespace mlat
