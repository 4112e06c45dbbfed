#pragma once

#include <stdexcept>
#include <string>

namespace matpow {

struct division_by_zero : std::domain_error {
  division_by_zero() : std::domain_error("division by zero") {}
};

struct non_rational_eigenvalues : std::domain_error {
  explicit non_rational_eigenvalues(const std::string& what) : std::domain_error(what) {}
};

struct parse_error : std::invalid_argument {
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

struct unknown_family : std::invalid_argument {
  explicit unknown_family(const std::string& id) : std::invalid_argument("unknown family: " + id) {}
};

struct malformed_params : std::invalid_argument {
  explicit malformed_params(const std::string& what) : std::invalid_argument(what) {}
};

struct unknown_fixture : std::invalid_argument {
  explicit unknown_fixture(const std::string& name) : std::invalid_argument("unknown fixture: " + name) {}
};

struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matpow
