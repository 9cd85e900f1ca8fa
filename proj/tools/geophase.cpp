#include "geophase/cli.hpp"

int main(int argc, char** argv) { return geophase::cli::main(argc, argv); }
