#include "sw/rng.hpp"

#include "sw/errors.hpp"

namespace sw {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NonPlanar: return "NonPlanar";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotTwoConnected: return "NotTwoConnected";
    case Errc::BadRoot: return "BadRoot";
    case Errc::BadInput: return "BadInput";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidM: return "InvalidM";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Empty: return "Empty";
    case Errc::NotBoundary: return "NotBoundary";
    case Errc::Not3Orientation: return "Not3Orientation";
    case Errc::NotACycle: return "NotACycle";
    case Errc::OracleContradiction: return "OracleContradiction";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::NotSharedStart: return "NotSharedStart";
    case Errc::NotTriangleBoundary: return "NotTriangleBoundary";
    case Errc::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

std::uint64_t Rng::below(std::uint64_t n) {
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    std::uint64_t t = (0 - n) % n;
    while (lo < t) {
      m = static_cast<unsigned __int128>(next()) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t Rng::hash_tag(std::string_view s) {
  // FNV-1a, then mixed
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return mix(h);
}

}  // namespace sw
