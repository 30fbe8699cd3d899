#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace openbook {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFibered : Error {
  explicit NotFibered(const std::string& what = "Seifert matrix has determinant != +-1")
      : Error(what) {}
};

struct NonSquare : Error {
  explicit NonSquare(const std::string& what = "matrix is not square") : Error(what) {}
};

struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& what = "matrix is not symmetric") : Error(what) {}
};

struct InvalidRoot : Error {
  explicit InvalidRoot(const std::string& what = "omega = exp(2*pi*i*j/k) must differ from 1")
      : Error(what) {}
};

struct OutOfRange : Error {
  using Error::Error;
};

struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& what =
                                  "sign not certified within the precision cap")
      : Error(what) {}
};

struct SignatureNotMultipleOf8 : Error {
  explicit SignatureNotMultipleOf8(const std::string& what =
                                       "cover signature not divisible by 8; convention breach")
      : Error(what) {}
};

struct OracleMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t line;
  std::size_t column;
  ParseError(std::size_t line_, std::size_t column_, const std::string& what)
      : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
              what),
        line(line_),
        column(column_) {}
};

}  // namespace openbook
