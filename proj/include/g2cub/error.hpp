#pragma once

#include <stdexcept>
#include <string>

namespace g2cub {

enum class Errc : int {
  invalid_argument = 1,
  domain = 2,
  no_convergence = 3,
  ill_conditioned = 4,
  io = 5,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace g2cub
