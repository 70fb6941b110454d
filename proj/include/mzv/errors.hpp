#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

enum class ErrorKind {
    Parse,
    AlphabetMismatch,
    UnsupportedSemigroup,
    NotInImage,
    NotAPoset,
    NotTreeLike,
    Unsupported,
    Divergent,
    Domain,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }

}  // namespace mzv
