#pragma once

#include "qrealize/realizability.hpp"

namespace qrealize::fixtures {

/// Four-state controller with two inputs and two outputs whose S~ has full rank 4.
LtiSystem paper_example();

/// The published S~ for paper_example(), rounded to four decimals.
RealMatrix paper_example_S_tilde();

/// A = J, B = 0, C = 0: S~ vanishes identically.
LtiSystem trivial_example();

/// A = 0, B = I, C = I: S~ = -2J.
LtiSystem small_example();

}  // namespace qrealize::fixtures
