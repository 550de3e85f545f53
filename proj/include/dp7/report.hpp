#pragma once

#include <string>

namespace dp7 {

// The batch report: geometry constants, the aCM line bundle census, the
// divisorial-part candidates, both classification tables, the Ulrich
// invariants, the endomorphism-bundle numbers, the final case list, the
// line classes on F and the cross-check results, as one markdown document.
std::string build_report();

}  // namespace dp7
