#include "jg/cli.hpp"

int main(int argc, char** argv) { return jg::cli::run_cli(argc, argv); }
