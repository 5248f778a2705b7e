// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace qc {

// Command-line entry point, factored out of main() so tests can invoke it
// with captured streams. Exit codes: 0 success / no contact, 10 contact
// found, 2 configuration or input errors, 3 smallness violation.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qc
