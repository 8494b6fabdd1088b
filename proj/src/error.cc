#include "plan_strings/error.h"

#include <utility>

namespace plan_strings {
namespace {

std::string unsupported_message(const std::vector<std::string>& tokens) {
  std::string msg = "unsupported PDDL feature";
  if (tokens.size() > 1) msg += "s";
  msg += ":";
  for (const auto& t : tokens) msg += " " + t;
  return msg;
}

}  // namespace

UnsupportedFeature::UnsupportedFeature(std::vector<std::string> tokens,
                                       SourceLocation loc)
    : InputError(unsupported_message(tokens), loc), tokens_(std::move(tokens)) {}

}  // namespace plan_strings
