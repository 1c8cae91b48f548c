#include "ptmrad/cli.hpp"

int main(int argc, char** argv) { return ptmrad::cli::run_main(argc, argv); }
