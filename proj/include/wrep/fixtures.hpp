#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wrep/planar.hpp"

namespace wrep {

/// W_n with the rim on a regular n-gon and the hub at the centre (inner).
Embedding wheel_embedding(int n);
/// C_n on a regular n-gon.
Embedding cycle_embedding(int n);

/// fig1-mid, fig1-right, fig2, fig3, fig4, w4 .. w9, donut.
const std::vector<std::string>& fixture_names();
/// Text of a shipped fixture; throws invalid_parameter for an unknown name.
std::string builtin_fixture(std::string_view name);

}  // namespace wrep
