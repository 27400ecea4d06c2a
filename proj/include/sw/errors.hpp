#pragma once

#include <stdexcept>
#include <string>

namespace sw {

enum class Errc {
  NonPlanar,
  NotSimple,
  NotTwoConnected,
  BadRoot,
  BadInput,
  TooLarge,
  InvalidM,
  OutOfRange,
  Infeasible,
  Empty,
  NotBoundary,
  Not3Orientation,
  NotACycle,
  OracleContradiction,
  BudgetExhausted,
  NotSharedStart,
  NotTriangleBoundary,
  NonConvergence,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sw
