#ifndef WORDSETS_ERROR_HPP_
#define WORDSETS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wordsets {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

class CorpusError : public Error {
public:
    using Error::Error;
};

class MiningError : public Error {
public:
    using Error::Error;
};

class ModelError : public Error {
public:
    using Error::Error;
};

/// Raised by load_table; `kind` tells version, syntax and integrity
/// failures apart.
class ModelFileError : public ModelError {
public:
    enum class Kind { io, version_mismatch, malformed, checksum_mismatch };

    ModelFileError(Kind kind, const std::string& what_arg)
        : ModelError(what_arg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

}  // namespace wordsets

#endif  // WORDSETS_ERROR_HPP_
