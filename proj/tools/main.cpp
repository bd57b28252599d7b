// SPDX-License-Identifier: Apache-2.0
#include "graphgate/cli.hpp"

int main(int argc, char** argv) { return graphgate::run_cli(argc, argv); }
