#pragma once

#include <stdexcept>
#include <string>

namespace heilbronn {

// Violated operation precondition (non-prime modulus, empty range, bad
// domain value). The CLI maps this to exit status 3.
class precondition_error : public std::invalid_argument {
  public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what)
    {}
};

} // namespace heilbronn
