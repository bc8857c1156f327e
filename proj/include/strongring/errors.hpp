#pragma once

#include <stdexcept>
#include <string>

namespace strongring {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// complex_core
struct ClosureViolation : Error {
    explicit ClosureViolation(const std::string& msg) : Error(msg) {}
};
struct EmptySetMember : Error {
    explicit EmptySetMember(const std::string& msg) : Error(msg) {}
};
struct BadParameter : Error {
    explicit BadParameter(const std::string& msg) : Error(msg) {}
};
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};
struct UnknownGenerator : Error {
    UnknownGenerator(const std::string& name, std::size_t offset)
        : Error("unknown generator '" + name + "' at offset " + std::to_string(offset)),
          offset(offset) {}
    std::size_t offset;
};
struct NotASingleTerm : Error {
    explicit NotASingleTerm(const std::string& msg) : Error(msg) {}
};

// graph_ops / operators
struct EmptyTerm : Error {
    explicit EmptyTerm(const std::string& msg) : Error(msg) {}
};
struct VertexOutOfRange : Error {
    explicit VertexOutOfRange(const std::string& msg) : Error(msg) {}
};
struct ValueInRange : Error {
    explicit ValueInRange(const std::string& msg) : Error(msg) {}
};
struct NotAnAutomorphism : Error {
    explicit NotAnAutomorphism(const std::string& msg) : Error(msg) {}
};

// exact_linalg
struct NotSquare : Error {
    explicit NotSquare(const std::string& msg) : Error(msg) {}
};
struct NotUnimodular : Error {
    NotUnimodular(const std::string& msg, std::string det)
        : Error(msg + " (det = " + det + ")"), determinant(std::move(det)) {}
    std::string determinant;
};

// invariants
struct BadOrder : Error {
    explicit BadOrder(const std::string& msg) : Error(msg) {}
};
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};
struct TooLargeForExact : Error {
    explicit TooLargeForExact(const std::string& msg) : Error(msg) {}
};
struct NotLocallyInjective : Error {
    explicit NotLocallyInjective(const std::string& msg) : Error(msg) {}
};

// spectral
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& msg) : Error(msg) {}
};
struct BadSignature : Error {
    explicit BadSignature(const std::string& msg) : Error(msg) {}
};

// dynamics
struct StepTooLarge : Error {
    explicit StepTooLarge(const std::string& msg) : Error(msg) {}
};
struct ContractionBoundViolated : Error {
    explicit ContractionBoundViolated(const std::string& msg) : Error(msg) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// cli
struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& msg) : Error(msg) {}
};

} // namespace strongring
