// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "lagdisp/cli.hpp"

int main(int argc, char** argv) { return lagdisp::run_cli(argc, argv, std::cout, std::cerr); }
