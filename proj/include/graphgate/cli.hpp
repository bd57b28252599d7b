// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace graphgate {

// Full command-line front end. Exit codes: 0 success / verified,
// 1 verification failed, 2 usage or spec-string error, 3 discovery
// exhausted, 4 I/O or schema error. Diagnostics go to stderr, machine
// output (JSON, DOT, term lists) to stdout or -o.
int run_cli(int argc, const char* const* argv);

} // namespace graphgate
