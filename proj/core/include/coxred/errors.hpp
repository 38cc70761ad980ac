#pragma once

#include <stdexcept>
#include <string>

namespace coxred {

// Base class for everything the pipeline can throw.  kind() is the stable
// machine-readable tag used by the CLI error object and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define COXRED_ERROR(Name)                                            \
    class Name : public Error {                                       \
    public:                                                            \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}   \
    }

COXRED_ERROR(NotInField);
COXRED_ERROR(NotIntegral);
COXRED_ERROR(NotPID);
COXRED_ERROR(UnsupportedField);
COXRED_ERROR(ParseError);
COXRED_ERROR(LabelError);
COXRED_ERROR(UnclassifiableSubdiagram);
COXRED_ERROR(Disconnected);
COXRED_ERROR(NonIntegralEntry);
COXRED_ERROR(NotFreeLattice);
COXRED_ERROR(CapExceeded);
COXRED_ERROR(NotCoxeter);
COXRED_ERROR(ZeroEulerCharacteristic);
COXRED_ERROR(DecompositionFailure);

#undef COXRED_ERROR

} // namespace coxred
