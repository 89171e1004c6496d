#pragma once

#include <stdexcept>
#include <string>

namespace chebpow {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimensions.
class dimension_error : public error {
  public:
    using error::error;
};

/// A FamilySpec violates one of its construction rules (b = 0, odd n for the anti family, ...).
class invalid_spec_error : public error {
  public:
    using error::error;
};

/// Inverse or negative power of a (numerically) singular matrix.
class singular_matrix_error : public error {
  public:
    using error::error;
};

/// A closed-form transforming matrix failed its closure check V * V^-1 = I.
class consistency_error : public error {
  public:
    using error::error;
};

}  // namespace chebpow
