#pragma once

#include <stdexcept>
#include <string>

namespace qbruhat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverse of zero requested.
class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("inverse of zero") {}
    explicit ZeroInverse(const std::string& what) : Error("inverse of zero: " + what) {}
};

/// A genericity assumption failed: a pivot, a quasideterminant's inner
/// submatrix, or a Gauss projection was singular. `witness` names the
/// failing position or minor so the caller can resample or report it.
class NotGeneric : public Error {
public:
    explicit NotGeneric(std::string witness)
        : Error("not generic: " + witness), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// x has no Gauss LDU decomposition (x is outside B^- U).
class NotInGaussCell : public NotGeneric {
public:
    explicit NotInGaussCell(std::string witness) : NotGeneric("Gauss cell: " + std::move(witness)) {}
};

/// x does not lie in the double Bruhat cell (or reduced cell) it was claimed to lie in.
class WrongCell : public Error {
public:
    explicit WrongCell(const std::string& what) : Error("wrong cell: " + what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

/// Malformed permutation, word, or double reduced word.
class InvalidWord : public Error {
public:
    explicit InvalidWord(const std::string& what) : Error("invalid word: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// An identity that must hold exactly was observed to fail. Only raised by
/// routines that evaluate two equal forms and compare them.
class IdentityViolation : public Error {
public:
    explicit IdentityViolation(const std::string& what) : Error("identity violated: " + what) {}
};

} // namespace qbruhat
