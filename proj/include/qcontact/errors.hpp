// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qc {

// Typed failure reasons. The CLI maps Config-class errors to exit code 2
// and SmallnessViolated to exit code 3.
enum class Errc {
  AllZero,            // quadric with every coefficient zero
  InvalidMotion,      // rotation part fails orthogonality or det +1 check
  NotAnEllipsoid,     // ellipsoid construction on a non-ellipsoid quadric
  Degenerate,         // reduced form has no real parameters (d'^2 <= 0 etc.)
  UnsupportedClass,   // operation not defined for this quadric class
  BadOrdering,        // standard-form parameters violate a >= b >= c > 0
  SmallnessViolated,  // contact query refused because the ellipsoid is not small
  NotAPlane,          // plane constructed from a quadric that is not a single plane
  NoMatchingZone,     // scene sign vector matches no declared zone
  LeadingZero,        // quartic leading coefficient inside the zero band
  Parse,              // malformed JSON input
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qc
