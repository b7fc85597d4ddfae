#pragma once

#include "wha/docs.hpp"
#include "wha/report.hpp"
#include "wha/search.hpp"
#include "wha/sources.hpp"

namespace wha {

inline constexpr const char* kToolkitVersion = "wha 1.0.0";

}  // namespace wha
