#include "rb2s/app/cli.hpp"

int main(int argc, char** argv) { return rb2s::app::run_cli(argc, argv); }
