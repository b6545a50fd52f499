#pragma once

#include <string>
#include <vector>

namespace fpt {

struct DispatchResult {
  // 0 holds/success, 1 refuted, 2 input error, 3 inconclusive, 4 internal.
  int code = 0;
  std::string report_json;  // newline-terminated JSON document
  std::string human;        // newline-terminated summary for stderr
};

// Runs one command line (program name excluded).
DispatchResult dispatch(const std::vector<std::string>& args);

}  // namespace fpt
