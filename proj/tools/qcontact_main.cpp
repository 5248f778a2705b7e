// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "qcontact/cli.hpp"

int main(int argc, char** argv) { return qc::cli_main(argc, argv, std::cout, std::cerr); }
