#include "recgeo/errors.hpp"

#include <utility>

namespace recgeo {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected, const std::string& detail) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ")";
  }
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error(describe(offset, expected, detail)), offset_(offset), expected_(std::move(expected)) {}

DivisionByZero::DivisionByZero(std::size_t offset)
    : Error("division by zero in rational literal at offset " + std::to_string(offset)), offset_(offset) {}

}  // namespace recgeo
