#pragma once

#include <stdexcept>
#include <string>

namespace ul {

enum class Errc : int {
  Ok = 0,
  InvalidArgument = 1,
  OddTypeInAlt = 2,
  Singular = 3,
  CharTwoSymmetric = 4,
  HypothesisViolated = 5,
  CapExceeded = 6,
  IdentityElement = 7,
  NotSimple = 8,
  BadRank = 9,
  RankTooLargeForExact = 10,
  BoundViolated = 11,
  CentralH = 12,
  NotInOrbit = 13,
  NoSplit = 14,
  RankTooSmall = 15,
  Unrealizable = 16,
  IndexOutOfRange = 17,
  SearchExhausted = 18,
  ConfigInvalid = 19,
  Internal = 99
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ul
