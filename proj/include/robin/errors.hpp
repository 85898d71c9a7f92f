#ifndef ROBIN_ERRORS_HPP
#define ROBIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robin
{

// Every failure raised by the library derives from robin::Error so that
// front ends can catch a single type and still report the specific name.
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
    virtual const char *kind() const noexcept { return "error"; }
};

#define ROBIN_DEFINE_ERROR(Name, tag)                                                                              \
    class Name : public Error                                                                                      \
    {                                                                                                              \
    public:                                                                                                        \
        explicit Name(const std::string &what) : Error(what) {}                                                    \
        const char *kind() const noexcept override { return tag; }                                                 \
    };

ROBIN_DEFINE_ERROR(PoleError, "pole")
ROBIN_DEFINE_ERROR(DomainError, "domain")
ROBIN_DEFINE_ERROR(NonFiniteError, "non-finite")
ROBIN_DEFINE_ERROR(CutoffOverflowError, "cutoff-overflow")
ROBIN_DEFINE_ERROR(IndeterminateError, "indeterminate")
ROBIN_DEFINE_ERROR(DegenerateError, "degenerate")
ROBIN_DEFINE_ERROR(ConvergenceError, "non-convergence")
ROBIN_DEFINE_ERROR(PoleCrossingError, "pole-crossing")
ROBIN_DEFINE_ERROR(TailTooLargeError, "tail-too-large")
ROBIN_DEFINE_ERROR(QuadratureBudgetError, "quadrature-budget")
ROBIN_DEFINE_ERROR(EtaExhaustionError, "eta-exhaustion")
ROBIN_DEFINE_ERROR(NonUnimodularError, "non-unimodular-limit")
ROBIN_DEFINE_ERROR(RadiusExhaustionError, "radius-exhaustion")
ROBIN_DEFINE_ERROR(UsageError, "usage")

#undef ROBIN_DEFINE_ERROR

} // namespace robin

#endif
