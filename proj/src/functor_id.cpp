#include "mlat/functor_id.hpp"

#include <algorithm>
#include <cctype>

namespace mlat {

const std::array<FunctorId, 11>& plain_functors() {
  static const std::array<FunctorId, 11> ids = {
      FunctorId::O,  FunctorId::E,  FunctorId::G,   FunctorId::GL,
      FunctorId::GR, FunctorId::GLR, FunctorId::F,  FunctorId::FL,
      FunctorId::FR, FunctorId::FLR, FunctorId::I,
  };
  return ids;
}

const std::array<FunctorId, 15>& all_functors() {
  static const std::array<FunctorId, 15> ids = {
      FunctorId::O,   FunctorId::E,  FunctorId::G,  FunctorId::GL,
      FunctorId::GR,  FunctorId::GLR, FunctorId::F, FunctorId::FL,
      FunctorId::FR,  FunctorId::FLR, FunctorId::Q, FunctorId::P,
      FunctorId::PL,  FunctorId::PR, FunctorId::I,
  };
  return ids;
}

std::string_view functor_name(FunctorId x) {
  static constexpr std::string_view names[kFunctorCount] = {
      "O", "E", "G", "GL", "GR", "GLR", "F", "FL", "FR", "FLR",
      "Q", "P", "PL", "PR", "I"};
  return names[static_cast<int>(x)];
}

std::optional<FunctorId> parse_functor(std::string_view token) {
  std::string upper(token);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (FunctorId x : all_functors()) {
    if (upper == functor_name(x)) {
      return x;
    }
  }
  return std::nullopt;
}

int functor_label_rank(FunctorId x) {
  static constexpr int rank[kFunctorCount] = {
      // O  E  G  GL GR GLR F   FL  FR  FLR Q  P  PL PR I
      0, 1, 2, 3, 4, 5, 10, 11, 12, 13, 6, 7, 8, 9, 14};
  return rank[static_cast<int>(x)];
}

}  // namespace mlat
