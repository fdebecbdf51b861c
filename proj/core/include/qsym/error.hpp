#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QSYM_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

QSYM_DEFINE_ERROR(DivisionByZero);
QSYM_DEFINE_ERROR(PoleAtPoint);
QSYM_DEFINE_ERROR(BadBase);
QSYM_DEFINE_ERROR(EmptyPartition);
QSYM_DEFINE_ERROR(NonInvertibleConstantTerm);
QSYM_DEFINE_ERROR(NonzeroConstantTerm);
QSYM_DEFINE_ERROR(NotPolynomialInQ);
QSYM_DEFINE_ERROR(TruncationMismatch);
QSYM_DEFINE_ERROR(BadIndices);
QSYM_DEFINE_ERROR(BadConstantTerm);
QSYM_DEFINE_ERROR(TooLarge);
QSYM_DEFINE_ERROR(NonRealResult);
QSYM_DEFINE_ERROR(ParseError);

#undef QSYM_DEFINE_ERROR

}  // namespace qsym
