#pragma once

#include <stdexcept>
#include <string>

namespace mfal {

enum class Errc {
  DivisionByZeroSeries,
  NeedsCyclotomic,
  NotConvergent,
  OddWeight,
  Unsupported,
  NotInvertible,
  NotNilpotent,
  NoRationalTriple,
  OddLabel,
  OddGrading,
  PoleAtEvaluationPoint,
  UnknownForm,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mfal
