#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatinv {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonSquareError : public Error {
public:
    NonSquareError(std::size_t rows, std::size_t cols)
        : Error("matrix is not square: " + std::to_string(rows) + "x" + std::to_string(cols)),
          rows(rows), cols(cols) {}
    std::size_t rows, cols;
};

/// Parse failure in any of the text formats; position is a byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax error at offset " + std::to_string(position) + ": " + message),
          position(position), message(message) {}
    std::size_t position;
    std::string message;
};

class UnknownGeneratorError : public Error {
public:
    explicit UnknownGeneratorError(std::string name)
        : Error("unknown generator '" + name + "'"), name(std::move(name)) {}
    std::string name;
};

class DuplicateGeneratorError : public Error {
public:
    explicit DuplicateGeneratorError(std::string name)
        : Error("duplicate generator '" + name + "'"), name(std::move(name)) {}
    std::string name;
};

class NotFiniteError : public Error {
public:
    explicit NotFiniteError(std::size_t bound)
        : Error("point group closure exceeded " + std::to_string(bound) + " elements"),
          bound(bound) {}
    std::size_t bound;
};

class NotUnimodularError : public Error {
public:
    explicit NotUnimodularError(std::size_t index)
        : Error("holonomy generator " + std::to_string(index) + " is not in GL(n,Z)"),
          index(index) {}
    std::size_t index;
};

class InconsistentRoutesError : public Error {
public:
    InconsistentRoutesError(std::size_t b1_direct, std::size_t b1_underlying)
        : Error("b1 routes disagree: direct presentation gives " + std::to_string(b1_direct) +
                ", holonomy/underlying data gives " + std::to_string(b1_underlying)),
          b1_direct(b1_direct), b1_underlying(b1_underlying) {}
    std::size_t b1_direct, b1_underlying;
};

class MissingDataError : public Error {
public:
    explicit MissingDataError(const std::string& label)
        : Error("descriptor '" + label + "' carries no presentation, holonomy or underlying data") {}
};

class RankMismatchError : public Error {
public:
    RankMismatchError(std::size_t n1, std::size_t n2)
        : Error("forms have different ranks: " + std::to_string(n1) + " vs " + std::to_string(n2)),
          n1(n1), n2(n2) {}
    std::size_t n1, n2;
};

class NotOrientableError : public Error {
public:
    explicit NotOrientableError(const std::string& label)
        : Error("descriptor '" + label + "' is not orientable; intersection forms need an oriented manifold") {}
};

class BettiOutOfRangeError : public Error {
public:
    explicit BettiOutOfRangeError(std::size_t b1)
        : Error("b1 = " + std::to_string(b1) + " is outside the admissible range 1..4"),
          b1(b1) {}
    std::size_t b1;
};

class SpinInconsistencyError : public Error {
public:
    explicit SpinInconsistencyError(std::size_t b1)
        : Error("non-spin descriptor has b1 = " + std::to_string(b1) +
                "; non-spin almost-flat 4-manifolds must have b1 = 1"),
          b1(b1) {}
    std::size_t b1;
};

class TorusMismatchError : public Error {
public:
    explicit TorusMismatchError(const std::string& message) : Error(message) {}
};

/// Structural problems in descriptor / corpus JSON documents.
class DescriptorError : public Error {
public:
    explicit DescriptorError(const std::string& message) : Error(message) {}
};

} // namespace flatinv
