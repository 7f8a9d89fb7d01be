#include "cli.hpp"

int main(int argc, char** argv) { return pbtd::cli::cli_main(argc, argv); }
