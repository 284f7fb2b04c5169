#ifndef UNIHYP_ERRORS_HPP
#define UNIHYP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unihyp {

enum class ErrorCode {
  InvalidInput,          // malformed value, empty set, bad flag
  InvalidIndex,          // a part that is not an element of I(H)
  InvalidVertex,         // unknown vertex token
  UnsupportedStructure,  // loops/multi-edges where the operation needs none
  SizeCap,               // instance exceeds a configured exact-computation cap
  KindError,             // wrong scalar kind for an exact operation
  NumericInput,          // non-finite entries
  ParseError,            // HG text problems, carries a line number in message
  Truncated,             // enumeration exceeded the caller-provided limit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace unihyp

#endif
