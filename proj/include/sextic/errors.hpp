#ifndef SEXTIC_ERRORS_HPP
#define SEXTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sextic {

// Base for all structured errors. `name()` is the stable identifier used on
// stderr and in test assertions; `numeric()` separates numerical failures
// (exit code 3) from precondition violations (exit code 2).
class Error : public std::runtime_error {
public:
    Error(std::string name, bool numeric, const std::string& msg)
        : std::runtime_error(name + ": " + msg),
          name_(std::move(name)), numeric_(numeric) {}
    const std::string& name() const { return name_; }
    bool numeric() const { return numeric_; }

private:
    std::string name_;
    bool numeric_;
};

#define SEXTIC_ERROR(Name, IsNumeric)                                       \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& msg = "")                          \
            : Error(#Name, IsNumeric, msg) {}                               \
    }

SEXTIC_ERROR(DegreeMismatch, false);
SEXTIC_ERROR(ZeroPoint, false);
SEXTIC_ERROR(NotSquare, false);
SEXTIC_ERROR(WrongDegree, false);
SEXTIC_ERROR(WrongCardinality, false);
SEXTIC_ERROR(PositiveDimensional, false);
SEXTIC_ERROR(IllConditioned, true);
SEXTIC_ERROR(KernelWrongSize, false);
SEXTIC_ERROR(NonReducedIntersection, false);
SEXTIC_ERROR(ResidualTooLarge, true);
SEXTIC_ERROR(DegenerateCubicSystem, false);
SEXTIC_ERROR(InconsistentQuotient, true);
SEXTIC_ERROR(DegenerateConfiguration, false);
SEXTIC_ERROR(WrongHVector, false);
SEXTIC_ERROR(SyzygyRankUnexpected, false);
SEXTIC_ERROR(NoSolution, true);
SEXTIC_ERROR(FilterMiscount, true);
SEXTIC_ERROR(ParseError, false);

#undef SEXTIC_ERROR

} // namespace sextic

#endif
