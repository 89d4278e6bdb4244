#pragma once
#include <stdexcept>
#include <string>

namespace x1gon {

// Every library error carries a stable name that the CLI prints on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define X1GON_ERROR(cls)                                                   \
  struct cls : Error {                                                     \
    explicit cls(const std::string& w = #cls) : Error(#cls, w) {}          \
  };

X1GON_ERROR(DivisionError)
X1GON_ERROR(FieldMismatch)
X1GON_ERROR(ZeroPolynomial)
X1GON_ERROR(ParseError)
X1GON_ERROR(UnsupportedLevel)
X1GON_ERROR(DegenerateSubstitution)
X1GON_ERROR(WildRamification)
X1GON_ERROR(NotSquarefree)
X1GON_ERROR(NotAFunction)
X1GON_ERROR(LabelingAmbiguous)
X1GON_ERROR(OrbitInconsistency)
X1GON_ERROR(NotADiamond)
X1GON_ERROR(NotInLattice)
X1GON_ERROR(RankDeficient)
X1GON_ERROR(EnumerationBudgetExceeded)
X1GON_ERROR(Undecided)
X1GON_ERROR(RoundingTie)
X1GON_ERROR(EmptyTarget)
X1GON_ERROR(BadPrime)
X1GON_ERROR(MalformedDivisor)
X1GON_ERROR(PrecisionExhausted)
X1GON_ERROR(Inconsistency)

#undef X1GON_ERROR

}  // namespace x1gon
