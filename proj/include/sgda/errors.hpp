#ifndef SGDA_ERRORS_HPP
#define SGDA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgda {

// Base for all user-facing failures. `code()` is a stable machine-readable
// identifier; the message carries context.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define SGDA_DEFINE_ERROR(Name)                        \
  class Name : public Error {                          \
   public:                                             \
    explicit Name(const std::string& msg)              \
        : Error(#Name, std::string(#Name ": ") + msg) {} \
  }

SGDA_DEFINE_ERROR(MalformedLine);
SGDA_DEFINE_ERROR(DuplicateEdge);
SGDA_DEFINE_ERROR(SelfLoop);
SGDA_DEFINE_ERROR(UnknownVertex);
SGDA_DEFINE_ERROR(EmptySet);
SGDA_DEFINE_ERROR(DegreeTooHigh);
SGDA_DEFINE_ERROR(NotComplete);
SGDA_DEFINE_ERROR(NotClusterable);
SGDA_DEFINE_ERROR(NoNegativeEdges);
SGDA_DEFINE_ERROR(SinglePartAllPositive);
SGDA_DEFINE_ERROR(InvalidDecomposition);
SGDA_DEFINE_ERROR(MalformedFormula);
SGDA_DEFINE_ERROR(NotAnNaeAssignment);
SGDA_DEFINE_ERROR(PreconditionViolated);
SGDA_DEFINE_ERROR(InternalVerificationFailed);

#undef SGDA_DEFINE_ERROR

}  // namespace sgda

#endif
