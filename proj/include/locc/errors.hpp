#pragma once

#include <stdexcept>
#include <string>

namespace locc {

// Base for all domain errors. name() is a stable machine-readable tag; the
// CLI prints it on stderr and test code dispatches on it, so never change a
// name without updating both.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define LOCC_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what)                   \
            : Error(#Name, what) {}                              \
    }

LOCC_DEFINE_ERROR(NegativeCoefficient);
LOCC_DEFINE_ERROR(NotNormalizable);
LOCC_DEFINE_ERROR(OutOfDomain);
LOCC_DEFINE_ERROR(WrongRank);
LOCC_DEFINE_ERROR(BoundaryCoefficient);
LOCC_DEFINE_ERROR(StepTooLarge);
LOCC_DEFINE_ERROR(NotConvertible);
LOCC_DEFINE_ERROR(EquivalentPair);
LOCC_DEFINE_ERROR(NoSolution);
LOCC_DEFINE_ERROR(Infeasible);
LOCC_DEFINE_ERROR(NotRank3);
LOCC_DEFINE_ERROR(ConvergenceFailure);
LOCC_DEFINE_ERROR(NoSharedCoefficient);
LOCC_DEFINE_ERROR(DegenerateKappa);
LOCC_DEFINE_ERROR(RankMismatch);
LOCC_DEFINE_ERROR(EmptyRange);
LOCC_DEFINE_ERROR(InvalidJson);

#undef LOCC_DEFINE_ERROR

} // namespace locc
