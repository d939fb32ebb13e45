#include "helix_lattice/cli.hpp"

int main(int argc, char** argv) { return helix_lattice::cli::run(argc, argv); }
