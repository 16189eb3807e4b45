#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fraczeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error { public: using Error::Error; };
class IndexError : public Error { public: using Error::Error; };
class CapacityError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class PoleError : public DomainError { public: using DomainError::DomainError; };
class GeometryError : public Error { public: using Error::Error; };
class EmptyRangeError : public ArgumentError { public: using ArgumentError::ArgumentError; };
class UnsupportedError : public ArgumentError { public: using ArgumentError::ArgumentError; };
class InsufficientDataError : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class UsageError : public Error { public: using Error::Error; };

/// Newton refinement failed; carries the last iterate.
class RefinementError : public Error {
public:
    RefinementError(const std::string& what, std::complex<double> last)
        : Error(what), last_iterate_(last) {}
    std::complex<double> last_iterate() const noexcept { return last_iterate_; }

private:
    std::complex<double> last_iterate_;
};

}  // namespace fraczeta
