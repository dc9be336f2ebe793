#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bergkern/core.hpp"

namespace bergkern::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kDomain = 2,
  kPole = 3,
  kIo = 4,
  kInputFormat = 5,
};

class InputFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal; -0 prints as 0.
std::string format_number(double v);

/// "re,im" (one variable) or "re1,im1,re2,im2" (two variables).
ComplexPoint parse_point(std::string_view text);
std::vector<double> parse_list(std::string_view text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bergkern::cli
