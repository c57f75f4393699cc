#pragma once

namespace rb2s::app {

/// Exit status: 0 evidence for, 1 evidence against, 2 inconclusive (test);
/// 0 success (simulate); 3 usage or configuration error; 4 input data error;
/// 5 any other failure.
int run_cli(int argc, char** argv);

}  // namespace rb2s::app
