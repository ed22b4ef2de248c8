#include "diagprop/spec_io.hpp"

int main(int argc, char** argv) { return diagprop::cli_main(argc, argv); }
