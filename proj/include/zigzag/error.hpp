#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zigzag {

  using element_index = std::uint32_t;

  struct Triple {
    element_index i, j, k;
    friend bool operator==(Triple const&, Triple const&) = default;
  };

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: tables, files, certificates, terms.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // Well-formed input that violates an operation's hypotheses.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

#define ZIGZAG_DEFINE_ERROR(Name, Base) \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  };

  ZIGZAG_DEFINE_ERROR(ParseError, ValidationError)
  ZIGZAG_DEFINE_ERROR(IndexError, ValidationError)
  ZIGZAG_DEFINE_ERROR(DegreeMismatch, ValidationError)
  ZIGZAG_DEFINE_ERROR(RegularityError, ValidationError)
  ZIGZAG_DEFINE_ERROR(NotAGroup, ValidationError)
  ZIGZAG_DEFINE_ERROR(InvalidCertificate, ValidationError)
  ZIGZAG_DEFINE_ERROR(UnboundVariable, ValidationError)

  ZIGZAG_DEFINE_ERROR(NotAnIdeal, PreconditionError)
  ZIGZAG_DEFINE_ERROR(NotASubsemigroup, PreconditionError)
  ZIGZAG_DEFINE_ERROR(NotGenerating, PreconditionError)
  ZIGZAG_DEFINE_ERROR(NotProper, PreconditionError)
  ZIGZAG_DEFINE_ERROR(PreconditionFailed, PreconditionError)
  ZIGZAG_DEFINE_ERROR(IncompleteAutomaton, PreconditionError)
  ZIGZAG_DEFINE_ERROR(IdentityLetterPresent, PreconditionError)
  ZIGZAG_DEFINE_ERROR(BudgetExceeded, PreconditionError)

#undef ZIGZAG_DEFINE_ERROR

  class AssociativityError : public ValidationError {
   public:
    explicit AssociativityError(Triple t)
        : ValidationError("table is not associative at (" + std::to_string(t.i)
                          + ", " + std::to_string(t.j) + ", "
                          + std::to_string(t.k) + ")"),
          _triple(t) {}

    Triple triple() const noexcept {
      return _triple;
    }

   private:
    Triple _triple;
  };

}  // namespace zigzag
