#include "wideness/cli.hpp"

int main(int argc, char** argv) { return wideness::run_cli(argc, argv); }
