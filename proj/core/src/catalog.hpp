#pragma once

#include <vector>

#include "harmsum/registry.hpp"

namespace harmsum::internal {

/// Every identity record, unsorted.
std::vector<IdentityRecord> build_catalog();

}  // namespace harmsum::internal
