#pragma once

#include <stdexcept>
#include <string>

namespace ctkit {

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    IndexOutOfRange,
    NotAnEdge,
    Capacity,
    InvalidSpec,
    GiveUp,
    IsolatedVertex,
    Timeout,
    NotInSet,
    Undefined,
    TheoryViolation,
    NotInClass,
    TooManyVariables,
    FlavorMismatch,
    InvalidFormula,
    NotSatisfying,
    InvalidInput,
    Parse,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::Capacity: return "Capacity";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::GiveUp: return "GiveUp";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::Timeout: return "Timeout";
    case Errc::NotInSet: return "NotInSet";
    case Errc::Undefined: return "Undefined";
    case Errc::TheoryViolation: return "TheoryViolation";
    case Errc::NotInClass: return "NotInClass";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::FlavorMismatch: return "FlavorMismatch";
    case Errc::InvalidFormula: return "InvalidFormula";
    case Errc::NotSatisfying: return "NotSatisfying";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace ctkit
