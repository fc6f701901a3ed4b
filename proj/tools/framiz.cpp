#include "framiz/cli.hpp"

int main(int argc, char** argv) { return framiz::run_cli(argc, argv); }
