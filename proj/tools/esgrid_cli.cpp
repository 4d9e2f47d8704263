#include "esgrid/cli.hpp"

int main(int argc, char** argv) { return esgrid::cli_main(argc, argv); }
