#pragma once

#include <functional>
#include <map>
#include <string>

#include "api/json_io.hpp"

namespace gsp::ops {

using io::json;
using Handler = std::function<json(const json&)>;

struct OpInfo {
  Handler run;
  std::string summary;
};

// "group.cmd" -> handler. Handlers throw InputError / DomainError.
const std::map<std::string, OpInfo>& registry();
json dispatch(const std::string& op, const json& payload);

}  // namespace gsp::ops
