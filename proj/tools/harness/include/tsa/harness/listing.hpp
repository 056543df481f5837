#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tsa/testbed.hpp"

namespace tsa::harness {

/// Aligned table: id, name, D, bounds, optimum.
void print_listing(std::ostream& out, const std::vector<const testbed::TestFunction*>& functions);

/// Same data as a JSON array.
std::string listing_json(const std::vector<const testbed::TestFunction*>& functions);

}  // namespace tsa::harness
