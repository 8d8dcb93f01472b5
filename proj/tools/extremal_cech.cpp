#include "extremal/cli.hpp"

int main(int argc, char** argv) { return extremal::cli_main(argc, argv); }
